// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include "oracles.hpp"
#include "stablevol/alpha.hpp"
#include "stablevol/dual_graph.hpp"
#include "stablevol/fixtures.hpp"

using namespace stablevol;

namespace {

struct Fixture {
  AlphaFiltration f;
  PersistenceTree tree;
};

Fixture make(const PointCloud& p) {
  AlphaFiltration f = alpha_filtration(p);
  PersistenceTree t = compute_tree(build_dual_graph(f.order), f.order);
  return {std::move(f), std::move(t)};
}

std::vector<PersistencePair> finite_top_pairs(const OrderWithLevel& o) {
  std::vector<PersistencePair> out;
  for (const auto& p : reduce(o))
    if (p.degree == o.complex().dim() - 1 && !p.essential()) out.push_back(p);
  return out;
}

// Cells reachable from the death simplex through faces that pass `keep`; the
// outer cell shows up as kOmegaInfinity.
std::set<SimplexId> reachable(const OrderWithLevel& o, SimplexId start,
                              const std::function<bool(SimplexId)>& keep) {
  const SimplicialComplex& c = o.complex();
  return oracle::component(start, [&](SimplexId x) {
    std::vector<SimplexId> out;
    if (x == kOmegaInfinity) return out;
    for (SimplexId f : c.facets(x)) {
      if (!keep(f)) continue;
      if (c.cofacets(f).size() == 1) out.push_back(kOmegaInfinity);
      for (SimplexId y : c.cofacets(f))
        if (y != x) out.push_back(y);
    }
    return out;
  });
}

}  // namespace

TEST_CASE("tree pairs equal reduction pairs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    for (int dim : {2, 3}) {
      Fixture fx = make(oracle::random_points(seed, 30, dim));
      CHECK(fx.tree.pairs() == finite_top_pairs(fx.f.order));
    }
}

TEST_CASE("optimal volume is the component of the death cell above the birth face") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (int dim : {2, 3}) {
      Fixture fx = make(oracle::random_points(seed, 25, dim));
      const OrderWithLevel& o = fx.f.order;
      for (const auto& p : fx.tree.pairs()) {
        auto rb = o.rank(p.birth);
        std::set<SimplexId> expect = reachable(o, p.death, [&](SimplexId f) { return o.rank(f) > rb; });
        std::vector<SimplexId> got = optimal_volume_tree(fx.tree, p);
        CHECK(std::vector<SimplexId>(expect.begin(), expect.end()) == got);
      }
    }
}

TEST_CASE("stable volume is the component above the raised band") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Fixture fx = make(oracle::random_points(seed, 25, 2));
    const OrderWithLevel& o = fx.f.order;
    for (const auto& p : fx.tree.pairs()) {
      for (double eps : {0.01, 0.05, 0.1}) {
        const double b = o.level(p.birth);
        std::set<SimplexId> expect = reachable(o, p.death, [&](SimplexId f) { return o.level(f) >= b + eps; });
        StableVolumeResult r = stable_volume_tree(fx.tree, o, p, eps);
        CHECK(std::vector<SimplexId>(expect.begin(), expect.end()) == r.cells);
        CHECK(r.boundary == volume_boundary(o.complex(), r.cells));
      }
    }
  }
}

TEST_CASE("stable volumes shrink with the bandwidth and sweep sizes agree") {
  Fixture fx = make(lattice_2d_defects(2, 12));
  const OrderWithLevel& o = fx.f.order;
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(i * 0.01);
  for (const auto& p : fx.tree.pairs()) {
    if (p.persistence() <= 0) continue;
    auto ov = optimal_volume_tree(fx.tree, p);
    auto sizes = sweep_sizes(fx.tree, o, p, grid);
    std::vector<SimplexId> prev = ov;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto sv = stable_volume_tree(fx.tree, o, p, grid[i]).cells;
      CHECK(sizes[i].second == sv.size());
      CHECK(std::includes(prev.begin(), prev.end(), sv.begin(), sv.end()));
      CHECK(std::binary_search(sv.begin(), sv.end(), p.death));
      prev = sv;
    }
    CHECK(stable_volume_tree(fx.tree, o, p, 0).cells == ov);
    CHECK(stable_volume_tree(fx.tree, o, p, p.persistence() + 1).cells == std::vector<SimplexId>{p.death});
  }
}

TEST_CASE("optimal volumes of distinct pairs are disjoint or nested") {
  Fixture fx = make(oracle::random_points(5, 40, 3));
  std::vector<std::vector<SimplexId>> vols;
  for (const auto& p : fx.tree.pairs()) vols.push_back(optimal_volume_tree(fx.tree, p));
  for (std::size_t i = 0; i < vols.size(); ++i)
    for (std::size_t j = i + 1; j < vols.size(); ++j) {
      std::vector<SimplexId> common;
      std::set_intersection(vols[i].begin(), vols[i].end(), vols[j].begin(), vols[j].end(),
                            std::back_inserter(common));
      CHECK((common.empty() || common == vols[i] || common == vols[j]));
    }
}

TEST_CASE("subtree sizes count descendants") {
  Fixture fx = make(oracle::random_points(9, 30, 2));
  for (const auto& p : fx.tree.pairs())
    CHECK(fx.tree.subtree_size(p.death) == fx.tree.descendants(p.death).size());
  std::size_t cells = fx.f.complex->simplices_of_dim(2).size();
  CHECK(fx.tree.subtree_size(kOmegaInfinity) == cells);
}

TEST_CASE("tree errors") {
  Fixture fx = make(fig1_five_points());
  const OrderWithLevel& o = fx.f.order;
  auto pairs = reduce(o);
  for (const auto& p : pairs) {
    if (p.degree == 0 && p.essential()) CHECK_THROWS_AS(optimal_volume_tree(fx.tree, p), DegreeError);
  }
  PersistencePair star = fx.tree.pairs().front();
  star.death = kNoSimplex;
  CHECK_THROWS_AS(optimal_volume_tree(fx.tree, star), StarPairError);
  CHECK_THROWS_AS(stable_volume_tree(fx.tree, o, fx.tree.pairs().front(), -1), Error);

  // A dangling edge has no top-dimensional coface.
  std::vector<Simplex> gens{Simplex{0, 1, 2}, Simplex{2, 3}};
  auto c = std::make_shared<const SimplicialComplex>(SimplicialComplex::closure(gens));
  OrderWithLevel bad = build_order(c, std::vector<double>(c->size(), 0.0));
  try {
    build_dual_graph(bad);
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(e.offenders().size() == 2);  // vertex 3 and edge {2,3}
  }
}
