// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/volume.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "stablevol/dual_graph.hpp"
#include "stablevol/lp.hpp"

namespace stablevol {

const char* to_string(VolumeMode m) {
  switch (m) {
    case VolumeMode::Optimal: return "optimal";
    case VolumeMode::Stable: return "stable";
    case VolumeMode::Sub: return "sub";
  }
  return "?";
}

VolumeProblem make_problem(const OrderWithLevel& o, const PersistencePair& pair, VolumeMode mode,
                           double eps, const std::vector<SimplexId>* optimal_volume) {
  if (pair.essential()) throw StarPairError("pair has no death simplex");
  if (!(eps >= 0)) throw Error("noise bandwidth must be non-negative");
  if (mode == VolumeMode::Sub && optimal_volume == nullptr)
    throw Error("sub-volume problem needs the optimal volume");
  const SimplicialComplex& c = o.complex();
  VolumeProblem p;
  p.pair = pair;
  p.degree = pair.degree;
  p.mode = mode;
  p.epsilon = mode == VolumeMode::Optimal ? 0.0 : eps;
  p.pin_birth = mode == VolumeMode::Optimal;
  const std::int32_t rb = o.rank(pair.birth), rd = o.rank(pair.death);
  const double b = o.level(pair.birth);
  // Requiring rank > rank(birth) is implied by the band when eps > 0; at
  // eps = 0 it keeps the birth simplex and its level-ties out of the problem.
  auto admit = [&](SimplexId s) {
    const std::int32_t r = o.rank(s);
    if (r <= rb || r >= rd) return false;
    return mode == VolumeMode::Optimal || above_band(o.level(s), b, p.epsilon);
  };
  for (SimplexId s : c.simplices_of_dim(p.degree + 1))
    if (admit(s)) p.candidates.push_back(s);
  for (SimplexId s : c.simplices_of_dim(p.degree))
    if (admit(s)) p.constraints.push_back(s);
  if (mode == VolumeMode::Sub) {
    std::vector<SimplexId> ov = *optimal_volume;
    std::sort(ov.begin(), ov.end());
    std::erase_if(p.candidates, [&](SimplexId s) { return !std::binary_search(ov.begin(), ov.end(), s); });
  }
  return p;
}

L1Program to_lp(const OrderWithLevel& o, const VolumeProblem& p, int pin) {
  const SimplicialComplex& c = o.complex();
  L1Program prog;
  prog.candidates = p.candidates;
  std::unordered_map<SimplexId, std::int32_t> index;
  for (std::size_t i = 0; i < p.candidates.size(); ++i)
    index.emplace(p.candidates[i], static_cast<std::int32_t>(i));
  auto make_row = [&](SimplexId face, int rhs) {
    L1Program::Row row;
    row.face = face;
    row.rhs = rhs;
    row.constant = incidence(c, p.pair.death, face);
    for (SimplexId cf : c.cofacets(face)) {
      auto it = index.find(cf);
      if (it != index.end()) row.terms.emplace_back(it->second, incidence(c, cf, face));
    }
    std::sort(row.terms.begin(), row.terms.end());
    return row;
  };
  for (SimplexId face : p.constraints) prog.rows.push_back(make_row(face, 0));
  if (p.pin_birth) prog.rows.push_back(make_row(p.pair.birth, pin >= 0 ? 1 : -1));
  return prog;
}

RawSolution solve_lp(const L1Program& prog) {
  // alpha = u - v with u, v >= 0; at an optimum abar = u + v = |alpha|.
  const std::size_t m = prog.candidates.size();
  StandardFormLp lp;
  lp.rows = prog.rows.size();
  lp.cols = 2 * m;
  lp.a.assign(lp.rows * lp.cols, 0.0);
  lp.b.resize(lp.rows);
  lp.c.assign(lp.cols, 1.0);
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    const auto& row = prog.rows[i];
    lp.b[i] = row.rhs - row.constant;
    for (auto [j, coeff] : row.terms) {
      lp.at(i, j) = coeff;
      lp.at(i, m + j) = -coeff;
    }
  }
  LpResult res = solve_standard_form(lp);
  RawSolution out;
  out.alpha.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.alpha[j] = res.x[j] - res.x[m + j];
  out.objective = res.objective;
  for (const auto& row : prog.rows) {
    double v = row.constant;
    for (auto [j, coeff] : row.terms) v += coeff * out.alpha[j];
    out.residual = std::max(out.residual, std::fabs(v - row.rhs));
  }
  return out;
}

std::vector<SimplexId> z2_violations(const OrderWithLevel& o, const VolumeProblem& p,
                                     const std::vector<SimplexId>& cells) {
  const SimplicialComplex& c = o.complex();
  std::vector<bool> in(c.size(), false);
  for (SimplexId s : cells) in[s] = true;
  auto parity = [&](SimplexId face) {
    int count = 0;
    for (SimplexId cf : c.cofacets(face)) count += in[cf] ? 1 : 0;
    return count % 2;
  };
  std::vector<SimplexId> bad;
  for (SimplexId face : p.constraints)
    if (parity(face) != 0) bad.push_back(face);
  if (p.pin_birth && parity(p.pair.birth) != 1) bad.push_back(p.pair.birth);
  return bad;
}

VolumeSolution round_support(const OrderWithLevel& o, const VolumeProblem& p, const RawSolution& raw,
                             double threshold) {
  VolumeSolution sol;
  sol.pair = p.pair;
  sol.mode = p.mode;
  sol.epsilon = p.epsilon;
  sol.objective = raw.objective;
  sol.residual = raw.residual;
  sol.cells.push_back(p.pair.death);
  for (std::size_t i = 0; i < p.candidates.size(); ++i)
    if (std::fabs(raw.alpha[i]) > threshold) sol.cells.push_back(p.candidates[i]);
  std::sort(sol.cells.begin(), sol.cells.end());
  std::vector<SimplexId> bad = z2_violations(o, p, sol.cells);
  if (!bad.empty())
    throw ApproximationMismatch(bad, "rounded l1 solution violates " + std::to_string(bad.size()) +
                                         " constraints over Z/2");
  sol.boundary = volume_boundary(o.complex(), sol.cells);
  return sol;
}

VolumeSolution solve_volume(const OrderWithLevel& o, const VolumeProblem& p, double threshold) {
  if (!p.pin_birth) return round_support(o, p, solve_lp(to_lp(o, p)), threshold);
  std::optional<RawSolution> best;
  for (int pin : {1, -1}) {
    try {
      RawSolution raw = solve_lp(to_lp(o, p, pin));
      if (!best || raw.objective < best->objective - 1e-9) best = std::move(raw);
    } catch (const InfeasibleError&) {
    }
  }
  if (!best) throw InfeasibleError("optimal volume problem is infeasible for both boundary signs");
  return round_support(o, p, *best, threshold);
}

VolumeSolution optimal_volume_lp(const OrderWithLevel& o, const PersistencePair& pair, double threshold) {
  return solve_volume(o, make_problem(o, pair, VolumeMode::Optimal), threshold);
}

VolumeSolution stable_volume_lp(const OrderWithLevel& o, const PersistencePair& pair, double eps,
                                double threshold) {
  return solve_volume(o, make_problem(o, pair, VolumeMode::Stable, eps), threshold);
}

VolumeSolution stable_subvolume_lp(const OrderWithLevel& o, const PersistencePair& pair, double eps,
                                   const std::vector<SimplexId>& optimal_volume, double threshold) {
  return solve_volume(o, make_problem(o, pair, VolumeMode::Sub, eps, &optimal_volume), threshold);
}

BruteForceResult brute_force_volume(const OrderWithLevel& o, const VolumeProblem& p) {
  const std::size_t m = p.candidates.size();
  if (m > 20)
    throw TooLargeError("exhaustive search supports at most 20 candidates, got " + std::to_string(m));
  const SimplicialComplex& c = o.complex();
  std::unordered_map<SimplexId, std::uint32_t> bit;
  for (std::size_t i = 0; i < m; ++i) bit.emplace(p.candidates[i], 1u << i);
  struct Parity {
    std::uint32_t mask = 0;
    int base = 0;  // death-simplex incidence parity
    int want = 0;
  };
  auto parity_of = [&](SimplexId face, int want) {
    Parity q;
    q.want = want;
    for (SimplexId cf : c.cofacets(face)) {
      if (cf == p.pair.death) q.base ^= 1;
      auto it = bit.find(cf);
      if (it != bit.end()) q.mask |= it->second;
    }
    return q;
  };
  std::vector<Parity> checks;
  for (SimplexId face : p.constraints) checks.push_back(parity_of(face, 0));
  if (p.pin_birth) checks.push_back(parity_of(p.pair.birth, 1));
  auto feasible = [&](std::uint32_t s) {
    for (const Parity& q : checks)
      if (((std::popcount(s & q.mask) + q.base) & 1) != q.want) return false;
    return true;
  };

  BruteForceResult out;
  for (std::size_t k = 0; k <= m; ++k) {
    // Combinations of k indices in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::uint32_t s = 0;
      for (std::size_t i : idx) s |= 1u << i;
      if (feasible(s)) {
        if (out.optimum_count == 0) {
          out.cells.push_back(p.pair.death);
          for (std::size_t i : idx) out.cells.push_back(p.candidates[i]);
          std::sort(out.cells.begin(), out.cells.end());
        }
        ++out.optimum_count;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (out.optimum_count > 0) return out;
  }
  throw InfeasibleError("no subset of candidates satisfies the constraints");
}

}  // namespace stablevol
