// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_BASELINES_HPP
#define STABLEVOL_BASELINES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stablevol/alpha.hpp"
#include "stablevol/persistence.hpp"

namespace stablevol {

/// Independent uniform noise on (-half_width, half_width) per coordinate.
struct NoiseModel {
  double half_width = 0.05;
  std::uint64_t seed = 0;
};

/// Perturbed copy of p for one trial; the stream depends only on
/// (seed, trial).
PointCloud perturb(const PointCloud& p, const NoiseModel& noise, std::uint64_t trial);

struct FrequencyMap {
  std::size_t trials = 0;
  std::size_t matched = 0;
  std::size_t failed = 0;  // matched, but the volume could not be computed
  std::vector<double> frequency;  // per input point, over matched trials
  std::string status = "ok";  // "warning" when more than half went unmatched
};

/// Repeatedly perturbs the points, recomputes the diagram, matches the
/// target (birth, death) in the given degree and counts how often each point
/// lies on the boundary of the matched pair's optimal volume.
FrequencyMap statistical_frequencies(const PointCloud& p, int degree, double birth, double death,
                                     const NoiseModel& noise, std::size_t trials, unsigned threads = 1);

struct CycleLoop {
  bool found = false;
  std::vector<SimplexId> edges;      // closed walk order, starting with the cocycle edge
  std::vector<VertexId> vertices;    // loop vertices in walk order
  double weight = 0;
};

/// Largest rank whose level is <= t (at least the birth rank, below death).
std::int32_t rsc_index_for_level(const OrderWithLevel& o, const PersistencePair& pair, double t);

/// Shortest loop through one representative-cocycle edge, with the rest of the
/// path avoiding the cocycle, inside the prefix ending at rank k_index. Edge
/// weights are hop counts, or Euclidean lengths when `points` is given.
CycleLoop reconstructed_shortest_cycle(const OrderWithLevel& o, const PersistencePair& pair,
                                       std::int32_t k_index, const PointCloud* points = nullptr);

/// Same, reusing a cocycle support computed by cohomology_reduce.
CycleLoop reconstructed_shortest_cycle(const OrderWithLevel& o, const PersistencePair& pair,
                                       const std::vector<SimplexId>& cocycle, std::int32_t k_index,
                                       const PointCloud* points = nullptr);

}  // namespace stablevol

#endif  // STABLEVOL_BASELINES_HPP
