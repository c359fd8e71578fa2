// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_LP_HPP
#define STABLEVOL_LP_HPP

#include <cstddef>
#include <vector>

namespace stablevol {

/// minimize c^T x subject to A x = b, x >= 0. A is row-major, rows x cols.
struct StandardFormLp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct LpResult {
  std::vector<double> x;
  double objective = 0;
  std::size_t iterations = 0;
};

/// Dense two-phase tableau simplex with Bland's rule. Deterministic.
/// Throws InfeasibleError / UnboundedError.
LpResult solve_standard_form(const StandardFormLp& lp);

}  // namespace stablevol

#endif  // STABLEVOL_LP_HPP
