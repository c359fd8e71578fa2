// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_PERSISTENCE_HPP
#define STABLEVOL_PERSISTENCE_HPP

#include <limits>
#include <vector>

#include "stablevol/complex.hpp"

namespace stablevol {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A birth-death simplices pair. Essential classes have death == kNoSimplex
/// and death_time == +infinity.
struct PersistencePair {
  int degree = 0;
  SimplexId birth = kNoSimplex;
  SimplexId death = kNoSimplex;
  double birth_time = 0;
  double death_time = kInfinity;

  bool essential() const { return death == kNoSimplex; }
  double persistence() const { return death_time - birth_time; }
  bool operator==(const PersistencePair&) const = default;
};

/// Z/2 boundary-matrix reduction with clearing. Pairs are sorted by
/// (degree, birth rank).
std::vector<PersistencePair> reduce(const OrderWithLevel& o);

/// Plain left-to-right column reduction without clearing.
std::vector<PersistencePair> reduce_standard(const OrderWithLevel& o);

/// The persistence diagram of one degree: pairs with birth_time != death_time.
struct Diagram {
  int degree = 0;
  std::vector<PersistencePair> pairs;

  std::size_t size() const { return pairs.size(); }
};

Diagram diagram(const std::vector<PersistencePair>& pairs, const OrderWithLevel& o, int degree);

/// Exact bottleneck distance. Essential points are matched only among
/// themselves; differing essential counts give +infinity.
double bottleneck(const Diagram& a, const Diagram& b);

/// Persistent cohomology via the anti-transposed boundary matrix.
struct CohomologyResult {
  std::vector<PersistencePair> pairs;
  /// cocycles[i] is the support of the representative cocycle of pairs[i],
  /// sorted by filtration rank.
  std::vector<std::vector<SimplexId>> cocycles;
};

CohomologyResult cohomology_reduce(const OrderWithLevel& o);

}  // namespace stablevol

#endif  // STABLEVOL_PERSISTENCE_HPP
