// Licensed under the Apache License 2.0 (see LICENSE file).
//
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Tolerances and seed counts are fixed here.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <unistd.h>
#include <string>

#include "oracles.hpp"
#include "stablevol/baselines.hpp"
#include "stablevol/dual_graph.hpp"
#include "stablevol/fixtures.hpp"
#include "stablevol/parallel.hpp"
#include "stablevol/volume.hpp"

using namespace stablevol;

namespace {

constexpr double kFig1Tolerance = 1e-9;
constexpr double kFig1Seconds = 1.0;
constexpr double kLatticeSeconds = 30.0;
constexpr double kEquivalenceSeconds = 60.0;
constexpr double kPlateauSeconds = 60.0;
constexpr double kWindowLo = 0.4, kWindowHi = 0.6;
constexpr double kPlateauLo = 0.03, kPlateauHi = 0.30, kPlateauWidth = 0.10;
constexpr double kGridStep = 0.01;
constexpr double kAgreementRate = 0.80;
constexpr double kLevelSlack = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
  int failures = 0;
  void line(int id, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Built {
  AlphaFiltration f;
  PersistenceTree tree;
};

Built build(const PointCloud& p) {
  AlphaFiltration f = alpha_filtration(p);
  PersistenceTree t = compute_tree(build_dual_graph(f.order), f.order);
  return {std::move(f), std::move(t)};
}

std::size_t boundary_vertex_count(const SimplicialComplex& c, const Chain& bd) {
  std::set<VertexId> v;
  for (SimplexId s : bd.support())
    for (VertexId x : c.simplex(s).vertices()) v.insert(x);
  return v.size();
}

bool subset(const std::vector<SimplexId>& a, const std::vector<SimplexId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PersistencePair longest_loop(const OrderWithLevel& o) {
  PersistencePair best;
  for (const auto& p : reduce(o))
    if (p.degree == 1 && !p.essential() && (best.birth == kNoSimplex || p.persistence() > best.persistence()))
      best = p;
  return best;
}

// ---------------------------------------------------------------------------

void criterion1(Report& r) {
  auto t0 = Clock::now();
  AlphaFiltration f = alpha_filtration(fig1_five_points());
  Diagram d = diagram(reduce(f.order), f.order, 1);
  const double secs = seconds_since(t0);
  std::vector<std::pair<double, double>> got;
  for (const auto& p : d.pairs) got.emplace_back(p.birth_time, p.death_time);
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<double, double>> want{{0.5, 1 / std::sqrt(3.0)}, {0.5, 1 / std::sqrt(2.0)}};
  bool ok = got.size() == want.size();
  double err = 0;
  for (std::size_t i = 0; ok && i < got.size(); ++i)
    err = std::max({err, std::fabs(got[i].first - want[i].first), std::fabs(got[i].second - want[i].second)});
  ok = ok && err <= kFig1Tolerance && secs < kFig1Seconds;
  r.line(1, ok, fmt("PD1 size %zu, max error %.2e, %.3f s", got.size(), err, secs));
}

void criterion2(Report& r) {
  auto t0 = Clock::now();
  constexpr int kSeeds = 20;
  constexpr double kEps = 0.05;
  std::array<bool, kSeeds> window_ok{}, large_ov{};
  std::array<std::size_t, kSeeds> counts{};
  parallel_for(kSeeds, default_thread_count(), [&](std::size_t i) {
    AlphaFiltration f = alpha_filtration(lattice_3x3x3(i + 1));
    const OrderWithLevel& o = f.order;
    Diagram d = diagram(reduce(o), o, 1);
    std::size_t count = 0;
    bool all_four = true, any_large = false;
    for (const auto& p : d.pairs) {
      if (p.essential() || p.birth_time < kWindowLo || p.birth_time > kWindowHi) continue;
      ++count;
      try {
        VolumeSolution sv = stable_volume_lp(o, p, kEps);
        if (boundary_vertex_count(o.complex(), sv.boundary) != 4) all_four = false;
        VolumeSolution ov = optimal_volume_lp(o, p);
        if (boundary_vertex_count(o.complex(), ov.boundary) > 4) any_large = true;
      } catch (const Error&) {
        all_four = false;
      }
    }
    counts[i] = count;
    window_ok[i] = count == 28 && all_four;
    large_ov[i] = any_large;
  });
  const double secs = seconds_since(t0);
  const auto a = std::count(window_ok.begin(), window_ok.end(), true);
  const auto b = std::count(large_ov.begin(), large_ov.end(), true);
  std::string cs;
  for (std::size_t c : counts) cs += std::to_string(c) + " ";
  r.line(2, a >= 18 && b >= 15 && secs < kLatticeSeconds,
         fmt("28 square stable volumes in %ld/20 seeds, large optimal volume in %ld/20 seeds, %.2f s "
             "(window counts: %s)",
             static_cast<long>(a), static_cast<long>(b), secs, cs.c_str()));
}

void criterion3(Report& r) {
  auto t0 = Clock::now();
  constexpr int kClouds = 100;
  const std::array<double, 4> eps{0.0, 0.05, 0.1, 0.2};
  std::vector<std::size_t> total(kClouds, 0), equal(kClouds, 0);
  parallel_for(kClouds, default_thread_count(), [&](std::size_t i) {
    Built b = build(oracle::random_points(1000 + i, 10 + i % 16, 2));
    const OrderWithLevel& o = b.f.order;
    for (const auto& p : b.tree.pairs())
      for (double e : eps) {
        ++total[i];
        try {
          if (stable_volume_lp(o, p, e).cells == stable_volume_tree(b.tree, o, p, e).cells) ++equal[i];
        } catch (const Error&) {
        }
      }
  });
  const double secs = seconds_since(t0);
  std::size_t t = 0, e = 0;
  for (int i = 0; i < kClouds; ++i) t += total[i], e += equal[i];
  r.line(3, t > 0 && e == t && secs < kEquivalenceSeconds,
         fmt("LP == tree in %zu/%zu cases, %.2f s", e, t, secs));
}

void criterion4(Report& r) {
  // kind 0: 2D degree 1 optimal, 1: 3D degree 2 optimal,
  // 2: 3D degree 1 optimal, 3: 3D degree 1 stable
  constexpr int kProblems = 200;
  constexpr std::size_t kMaxCandidates = 18;
  struct Outcome {
    bool top = false;
    bool agree = false;
    bool mismatch = false;  // thrown, i.e. reported
    bool silent = false;    // returned a support violating the constraints
    std::size_t candidates = 0;
  };
  std::vector<Outcome> out(kProblems);
  parallel_for(kProblems, default_thread_count(), [&](std::size_t i) {
    const int kind = static_cast<int>(i % 4);
    const int dim = kind == 0 ? 2 : 3;
    const int degree = kind == 0 ? 1 : kind == 1 ? 2 : 1;
    const VolumeMode mode = kind == 3 ? VolumeMode::Stable : VolumeMode::Optimal;
    for (std::uint64_t attempt = 0;; ++attempt) {
      std::mt19937_64 rng(i * 7919 + attempt);
      const std::size_t n = 8 + rng() % 7;
      AlphaFiltration f = alpha_filtration(oracle::random_points(rng(), n, dim));
      const OrderWithLevel& o = f.order;
      std::vector<VolumeProblem> fits;
      for (const auto& p : diagram(reduce(o), o, degree).pairs) {
        if (p.essential()) continue;
        VolumeProblem prob = make_problem(o, p, mode, mode == VolumeMode::Stable ? 0.02 : 0.0);
        if (!prob.candidates.empty() && prob.candidates.size() <= kMaxCandidates) fits.push_back(prob);
      }
      if (fits.empty()) continue;
      const VolumeProblem& prob = fits[rng() % fits.size()];
      Outcome& res = out[i];
      res.top = degree == dim - 1;
      res.candidates = prob.candidates.size();
      const std::size_t best = brute_force_volume(o, prob).cells.size();
      try {
        VolumeSolution lp = solve_volume(o, prob);
        res.silent = !z2_violations(o, prob, lp.cells).empty();
        res.agree = !res.silent && lp.cells.size() == best;
      } catch (const ApproximationMismatch&) {
        res.mismatch = true;
      }
      return;
    }
  });
  std::size_t top = 0, top_agree = 0, low = 0, low_agree = 0, thrown = 0, silent = 0, maxf = 0;
  for (const auto& o : out) {
    (o.top ? top : low)++;
    if (o.agree) (o.top ? top_agree : low_agree)++;
    thrown += o.mismatch;
    silent += o.silent;
    maxf = std::max(maxf, o.candidates);
  }
  const double rate = low ? static_cast<double>(low_agree) / static_cast<double>(low) : 0.0;
  r.line(4, top_agree == top && rate > kAgreementRate && silent == 0 && maxf <= kMaxCandidates,
         fmt("top degree %zu/%zu, 3D degree-1 %zu/%zu (%.1f%%), reported mismatches %zu, silent %zu",
             top_agree, top, low_agree, low, 100 * rate, thrown, silent));
}

void criterion5(Report& r) {
  constexpr int kTrials = 100;
  constexpr std::size_t kOraclePoints = 6;
  std::vector<std::pair<std::string, PointCloud>> fixtures;
  for (const std::string& name : fixture_names()) fixtures.emplace_back(name, generate_fixture(name, 1));
  std::size_t checks = 0, violations = 0, oracle_checks = 0, oracle_mismatch = 0;
  for (const auto& [name, cloud] : fixtures) {
    AlphaFiltration f = alpha_filtration(cloud);
    const OrderWithLevel& base = f.order;
    const SimplicialComplex& c = *f.complex;
    const auto base_pairs = reduce(base);
    std::mt19937_64 rng(std::hash<std::string>{}(name) ^ 0x5eed);
    for (int t = 0; t < kTrials; ++t) {
      const double eta = 0.1 * std::uniform_real_distribution<double>(0.01, 1.0)(rng);
      std::uniform_real_distribution<double> noise(-eta, eta);
      std::vector<double> level(c.size());
      // Simplices are stored by dimension, so faces are settled first.
      for (SimplexId s = 0; s < static_cast<SimplexId>(c.size()); ++s) {
        level[s] = base.level(s) + noise(rng);
        for (SimplexId fc : c.facets(s)) level[s] = std::max(level[s], level[fc]);
      }
      double sup = 0;
      for (SimplexId s = 0; s < static_cast<SimplexId>(c.size()); ++s)
        sup = std::max(sup, std::fabs(level[s] - base.level(s)));
      OrderWithLevel q = build_order(f.complex, level);
      const auto q_pairs = reduce(q);
      for (int k = 0; k <= c.dim(); ++k) {
        Diagram a = diagram(base_pairs, base, k), b = diagram(q_pairs, q, k);
        const double db = bottleneck(a, b);
        ++checks;
        if (!(db <= sup + kLevelSlack)) ++violations;
        if (a.size() <= kOraclePoints && b.size() <= kOraclePoints) {
          ++oracle_checks;
          if (std::fabs(db - oracle::bottleneck_factorial(a, b)) > kLevelSlack) ++oracle_mismatch;
        }
      }
    }
  }
  r.line(5, violations == 0 && oracle_mismatch == 0 && oracle_checks > 0,
         fmt("%zu diagram comparisons over %zu fixtures, %zu stability violations, %zu/%zu oracle mismatches",
             checks, fixtures.size(), violations, oracle_mismatch, oracle_checks));
}

void criterion6(Report& r) {
  const std::array<double, 7> grid{0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.4};
  std::size_t fixtures = 0, pair_sets_equal = 0, nest_fail = 0, overlap_fail = 0, pairs_checked = 0;
  for (const std::string& name : fixture_names()) {
    ++fixtures;
    Built b = build(generate_fixture(name, 1));
    const OrderWithLevel& o = b.f.order;
    std::vector<PersistencePair> expect;
    for (const auto& p : reduce(o))
      if (p.degree == o.complex().dim() - 1 && !p.essential()) expect.push_back(p);
    if (expect == b.tree.pairs()) ++pair_sets_equal;
    std::vector<std::vector<SimplexId>> ovs;
    for (const auto& p : b.tree.pairs()) {
      ++pairs_checked;
      std::vector<SimplexId> ov = optimal_volume_tree(b.tree, p);
      std::vector<SimplexId> prev = ov;
      for (double e : grid) {
        std::vector<SimplexId> sv = stable_volume_tree(b.tree, o, p, e).cells;
        if (!subset(sv, prev) || !subset(sv, ov)) ++nest_fail;
        prev = std::move(sv);
      }
      ovs.push_back(std::move(ov));
    }
    for (std::size_t i = 0; i < ovs.size(); ++i)
      for (std::size_t j = i + 1; j < ovs.size(); ++j) {
        const auto& a = ovs[i];
        const auto& bb = ovs[j];
        std::vector<SimplexId> common;
        std::set_intersection(a.begin(), a.end(), bb.begin(), bb.end(), std::back_inserter(common));
        if (!common.empty() && common != a && common != bb) ++overlap_fail;
      }
  }
  r.line(6, pair_sets_equal == fixtures && nest_fail == 0 && overlap_fail == 0,
         fmt("%zu pairs on %zu fixtures: tree==reduction on %zu, nesting failures %zu, overlapping volumes %zu",
             pairs_checked, fixtures, pair_sets_equal, nest_fail, overlap_fail));
}

// An order q on the same complex with |q - r| < eps/2 in which everything
// before omega0 under r stays before omega0.
OrderWithLevel sample_near(const OrderWithLevel& r, const std::shared_ptr<const SimplicialComplex>& c,
                           SimplexId omega0, double eps, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> noise(-0.49 * eps, 0.49 * eps);
  std::vector<double> q(c->size());
  for (SimplexId s = 0; s < static_cast<SimplexId>(c->size()); ++s) {
    q[s] = r.level(s) + noise(rng);
    for (SimplexId fc : c->facets(s)) q[s] = std::max(q[s], q[fc]);
  }
  const std::int32_t r0 = r.rank(omega0);
  for (SimplexId s = 0; s < static_cast<SimplexId>(c->size()); ++s)
    if (r.rank(s) < r0) q[s] = std::min(q[s], q[omega0]);
  std::vector<SimplexId> seq(c->size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](SimplexId a, SimplexId b) {
    return q[a] != q[b] ? q[a] < q[b] : r.rank(a) < r.rank(b);
  });
  return OrderWithLevel::from_sequence(c, q, seq);
}

void criterion7(Report& r) {
  constexpr int kSamples = 50;
  const std::array<double, 3> eps{0.02, 0.05, 0.1};
  std::vector<PointCloud> clouds{fig1_five_points(), lattice_2d_defects(1, 10), lattice_2d_defects(2, 10),
                                 annulus(1), oracle::random_points(77, 25, 2)};
  std::size_t samples = 0, held = 0;
  std::mt19937_64 rng(2024);
  for (const PointCloud& cloud : clouds) {
    Built b = build(cloud);
    const OrderWithLevel& o = b.f.order;
    for (const auto& p : b.tree.pairs()) {
      if (p.persistence() <= 0) continue;
      for (double e : eps) {
        std::vector<SimplexId> sv = stable_volume_tree(b.tree, o, p, e).cells;
        for (int k = 0; k < kSamples; ++k) {
          OrderWithLevel q = sample_near(o, b.f.complex, p.death, e, rng);
          PersistenceTree tq = compute_tree(build_dual_graph(q), q);
          ++samples;
          for (const auto& pq : tq.pairs())
            if (pq.death == p.death) {
              if (subset(sv, optimal_volume_tree(tq, pq))) ++held;
              break;
            }
        }
      }
    }
  }
  r.line(7, samples > 0 && held == samples, fmt("inclusion held in %zu/%zu sampled orders", held, samples));
}

void criterion8(Report& r) {
  auto t0 = Clock::now();
  constexpr int kSeeds = 20;
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(i * kGridStep);
  std::array<bool, kSeeds> found{};
  std::array<std::pair<double, double>, kSeeds> widest{};
  parallel_for(kSeeds, default_thread_count(), [&](std::size_t i) {
    Built b = build(lattice_2d_defects(i + 1));
    const OrderWithLevel& o = b.f.order;
    PersistencePair best;
    double pers = -1;
    for (const auto& p : b.tree.pairs())
      if (p.persistence() > pers) pers = p.persistence(), best = p;
    auto sizes = sweep_sizes(b.tree, o, best, grid);
    // Maximal runs of equal size.
    for (std::size_t a = 0; a < sizes.size();) {
      std::size_t z = a;
      while (z + 1 < sizes.size() && sizes[z + 1].second == sizes[a].second) ++z;
      const double lo = grid[a], hi = grid[z];
      if (hi - lo > widest[i].second - widest[i].first) widest[i] = {lo, hi};
      if (lo >= kPlateauLo - 1e-9 && hi <= kPlateauHi + 1e-9 && hi - lo >= kPlateauWidth - 1e-9) found[i] = true;
      a = z + 1;
    }
  });
  const double secs = seconds_since(t0);
  const auto hits = std::count(found.begin(), found.end(), true);
  std::string runs;
  for (const auto& [lo, hi] : widest) runs += fmt("[%.2f,%.2f] ", lo, hi);
  r.line(8, hits >= 16 && secs < kPlateauSeconds,
         fmt("plateau in %ld/20 seeds, %.2f s (widest runs: %s)", static_cast<long>(hits), secs, runs.c_str()));
}

void criterion9(Report& r) {
  OrderWithLevel o = octagon_rsc_filtration();
  PersistencePair loop_pair = longest_loop(o);
  std::vector<double> weights;
  bool all_found = true;
  for (std::int32_t k = o.rank(loop_pair.birth); k < o.rank(loop_pair.death); ++k) {
    CycleLoop l = reconstructed_shortest_cycle(o, loop_pair, k);
    all_found = all_found && l.found;
    weights.push_back(l.weight);
  }
  const bool monotone = std::is_sorted(weights.rbegin(), weights.rend());
  auto at_stage = [&](double stage) {
    return reconstructed_shortest_cycle(o, loop_pair, rsc_index_for_level(o, loop_pair, stage)).weight;
  };
  const double w4 = at_stage(4), w5 = at_stage(5);

  PointCloud hex = hexagon();
  AlphaFiltration hf = alpha_filtration(hex);
  const OrderWithLevel& ho = hf.order;
  PersistencePair hp = longest_loop(ho);
  const std::int32_t k = rsc_index_for_level(ho, hp, hp.birth_time + 0.49);
  CycleLoop hl = reconstructed_shortest_cycle(ho, hp, k);
  std::vector<bool> in(ho.size(), false);
  for (std::int32_t i = 0; i <= k; ++i) in[ho.at(i)] = true;
  const std::size_t shortest = oracle::shortest_nontrivial_loop(ho.complex(), in);
  const bool hex_ok = hl.found && hl.edges.size() == shortest && oracle::nontrivial_loop(ho.complex(), in, hl.edges);
  r.line(9, all_found && monotone && w5 < w4 && hex_ok,
         fmt("octagon weights non-increasing: %s, stage 4 -> 5: %.0f -> %.0f; hexagon loop %zu edges, oracle %zu",
             monotone ? "yes" : "no", w4, w5, hl.edges.size(), shortest));
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\nexit=" + std::to_string(status);
}

void criterion10(Report& r) {
  namespace fs = std::filesystem;
  const std::string cli = STABLEVOL_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / ("stablevol_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const PointCloud& p) {
    std::ofstream(dir / name) << format_pointcloud(p);
    return (dir / name).string();
  };
  const std::string fig1 = write("fig1.txt", fig1_five_points());
  const std::string lat = write("lattice.txt", lattice_3x3x3(1));
  const std::string grid2 = write("grid.txt", lattice_2d_defects(1, 12));
  const std::vector<std::string> commands{
      "gen lattice-2d-defects --seed 3",
      "pd " + fig1,
      "pd --degree 0 --degree 1 --degree 2 " + lat,
      "pd --tsv " + grid2,
      "vol --pair-index 0 --method optimal " + grid2,
      "vol --pair-index 0 --method stable-tree --epsilon 0.05 " + grid2,
      "vol --degree 1 --pair-index 3 --method stable-lp --epsilon 0.05 " + lat,
      "vol --degree 1 --pair-index 3 --method sub --epsilon 0.05 " + lat,
      "sweep --pair-index 0 " + grid2,
      "sweep --degree 1 --pair-index 2 --epsilon-grid 0:0.1:0.02 " + lat,
      "stat --degree 1 --pair-index 0 --seed 7 --trials 16 " + grid2,
      "rsc --pair-index 0 " + grid2,
      "rsc --pair-index 0 --euclidean --epsilon 0.2 " + grid2,
  };
  std::size_t identical = 0;
  std::string first_bad;
  for (const std::string& c : commands) {
    const std::string a = run_capture(cli + " --threads 1 " + c + " 2>&1");
    const std::string b = run_capture(cli + " --threads 1 " + c + " 2>&1");
    const std::string d = run_capture(cli + " --threads 8 " + c + " 2>&1");
    const bool ok = a == b && a == d && a.find("exit=0") != std::string::npos;
    identical += ok;
    if (!ok && first_bad.empty()) first_bad = c;
  }
  fs::remove_all(dir);
  r.line(10, identical == commands.size(),
         fmt("%zu/%zu commands byte-identical across runs and thread counts%s%s", identical, commands.size(),
             first_bad.empty() ? "" : "; first difference: ", first_bad.c_str()));
}

}  // namespace

int main() {
  Report r;
  const std::vector<std::function<void(Report&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                           criterion5, criterion6, criterion7, criterion8,
                                                           criterion9, criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i](r);
    } catch (const std::exception& e) {
      r.line(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", r.failures, criteria.size());
  return r.failures == 0 ? 0 : 1;
}
