// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_VOLUME_HPP
#define STABLEVOL_VOLUME_HPP

#include <string>
#include <utility>
#include <vector>

#include "stablevol/chain.hpp"
#include "stablevol/persistence.hpp"

namespace stablevol {

enum class VolumeMode { Optimal, Stable, Sub };

const char* to_string(VolumeMode m);

/// Candidate and constraint simplices of a volume optimization problem.
struct VolumeProblem {
  PersistencePair pair;
  int degree = 0;
  VolumeMode mode = VolumeMode::Optimal;
  double epsilon = 0;
  std::vector<SimplexId> candidates;   // (degree+1)-simplices, sorted by id
  std::vector<SimplexId> constraints;  // degree-simplices, sorted by id
  /// Optimal mode additionally requires the birth simplex to stay on the
  /// boundary of the volume.
  bool pin_birth = false;
};

/// Builds the problem. Sub mode needs the optimal volume (cells including the
/// death simplex). Throws StarPairError for essential pairs.
VolumeProblem make_problem(const OrderWithLevel& o, const PersistencePair& pair, VolumeMode mode,
                           double eps = 0, const std::vector<SimplexId>* optimal_volume = nullptr);

/// The l1 relaxation: minimize sum(abar) s.t. abar - a >= 0, abar + a >= 0 and
/// one equality row per constrained face.
struct L1Program {
  struct Row {
    SimplexId face = kNoSimplex;
    int constant = 0;  // incidence of the death simplex
    int rhs = 0;
    std::vector<std::pair<std::int32_t, int>> terms;  // (candidate index, incidence)
  };

  std::vector<SimplexId> candidates;
  std::vector<Row> rows;

  std::size_t variable_count() const { return 2 * candidates.size(); }
  std::size_t constraint_count() const { return 2 * candidates.size() + rows.size(); }
};

/// pin selects the value (+1 or -1) of the birth-simplex row in optimal mode.
L1Program to_lp(const OrderWithLevel& o, const VolumeProblem& p, int pin = 1);

struct RawSolution {
  std::vector<double> alpha;  // per candidate
  double objective = 0;
  double residual = 0;  // max equality violation
};

RawSolution solve_lp(const L1Program& prog);

struct VolumeSolution {
  PersistencePair pair;
  VolumeMode mode = VolumeMode::Optimal;
  double epsilon = 0;
  std::vector<SimplexId> cells;  // sorted ids, includes the death simplex
  Chain boundary{Field::Z2, 0};
  double objective = 0;
  double residual = 0;
  std::string status = "optimal";
};

inline constexpr double kDefaultRoundingThreshold = 1e-6;

/// Support {|alpha| > threshold} plus the death simplex, verified exactly over
/// Z/2. Throws ApproximationMismatch listing violated faces.
VolumeSolution round_support(const OrderWithLevel& o, const VolumeProblem& p, const RawSolution& raw,
                             double threshold = kDefaultRoundingThreshold);

/// Solves the relaxation (both pin signs in optimal mode) and rounds.
VolumeSolution solve_volume(const OrderWithLevel& o, const VolumeProblem& p,
                            double threshold = kDefaultRoundingThreshold);

/// Convenience pipelines.
VolumeSolution optimal_volume_lp(const OrderWithLevel& o, const PersistencePair& pair,
                                 double threshold = kDefaultRoundingThreshold);
VolumeSolution stable_volume_lp(const OrderWithLevel& o, const PersistencePair& pair, double eps,
                                double threshold = kDefaultRoundingThreshold);
VolumeSolution stable_subvolume_lp(const OrderWithLevel& o, const PersistencePair& pair, double eps,
                                   const std::vector<SimplexId>& optimal_volume,
                                   double threshold = kDefaultRoundingThreshold);

struct BruteForceResult {
  std::vector<SimplexId> cells;  // sorted ids, includes the death simplex
  std::size_t optimum_count = 0;  // number of minimizers of that size
};

/// Exact l0 minimizer by subset enumeration; ties go to the lexicographically
/// smallest candidate-id set. Throws TooLargeError above 20 candidates and
/// InfeasibleError when no subset works.
BruteForceResult brute_force_volume(const OrderWithLevel& o, const VolumeProblem& p);

/// Faces where the Z/2 boundary of cells violates the problem's constraints.
std::vector<SimplexId> z2_violations(const OrderWithLevel& o, const VolumeProblem& p,
                                     const std::vector<SimplexId>& cells);

}  // namespace stablevol

#endif  // STABLEVOL_VOLUME_HPP
