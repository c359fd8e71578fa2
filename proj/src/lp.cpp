// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stablevol/errors.hpp"

namespace stablevol {

namespace {

constexpr double kEps = 1e-9;

class Tableau {
 public:
  // Rows 0..m-1 are constraints, row m is the reduced-cost row; the last
  // column holds the right-hand side (and minus the objective in row m).
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_((m + 1) * (n + 1), 0.0), basis_(m) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, n_); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t col) {
    const double p = at(r, col);
    for (std::size_t j = 0; j <= n_; ++j) at(r, j) /= p;
    at(r, col) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) at(i, j) -= f * at(r, j);
      at(i, col) = 0.0;
    }
    basis_[r] = col;
  }

  // Bland's rule: lowest-index improving column, lowest-index leaving
  // variable among ratio ties. Returns false on unboundedness.
  bool run(std::size_t allowed_cols, std::size_t& iterations) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (at(m_, j) < -kEps) {
          enter = j;
          break;
        }
      if (enter == allowed_cols) return true;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double v = at(i, enter);
        if (v <= kEps) continue;
        const double ratio = rhs(i) / v;
        const bool better = leave == m_ || ratio < best - kEps;
        const bool tie = !better && ratio <= best + kEps && basis_[i] < basis_[leave];
        if (better || tie) {
          best = better ? ratio : std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      if (++iterations > 1000000) throw Error("simplex iteration limit exceeded");
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_form(const StandardFormLp& lp) {
  const std::size_t m = lp.rows, n = lp.cols, total = n + m;
  Tableau t(m, total);
  double bscale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = lp.b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * lp.at(i, j);
    t.at(i, n + i) = 1.0;
    t.rhs(i) = sign * lp.b[i];
    t.basis()[i] = n + i;
    bscale = std::max(bscale, std::fabs(lp.b[i]));
  }
  // Phase 1: minimize the sum of artificials.
  for (std::size_t j = 0; j <= total; ++j) {
    if (j >= n && j < total) continue;
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.at(i, j);
    t.at(m, j) = -s;
  }
  LpResult out;
  t.run(total, out.iterations);
  if (-t.rhs(m) > 1e-7 * bscale) throw InfeasibleError("linear program is infeasible");

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are redundant and keep a zero artificial.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::fabs(t.at(i, j)) > kEps) {
        t.pivot(i, j);
        break;
      }
  }

  // Phase 2 reduced costs.
  for (std::size_t j = 0; j <= total; ++j) t.at(m, j) = j < n ? lp.c[j] : 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t bi = t.basis()[i];
    const double cb = bi < n ? lp.c[bi] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= total; ++j) t.at(m, j) -= cb * t.at(i, j);
  }
  if (!t.run(n, out.iterations)) throw UnboundedError("linear program is unbounded");

  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < n) out.x[t.basis()[i]] = t.rhs(i);
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.c[j] * out.x[j];
  return out;
}

}  // namespace stablevol
