// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stablevol {

DualGraph build_dual_graph(const OrderWithLevel& o) {
  const SimplicialComplex& c = o.complex();
  DualGraph g;
  g.n = c.dim();
  if (g.n < 1) throw ConditionError({}, "dual graph needs a complex of dimension >= 1");
  // A simplex reaches an n-simplex iff one of its cofacets does.
  std::vector<bool> reaches_top(c.size(), false);
  for (int k = g.n; k >= 0; --k) {
    for (SimplexId id : c.simplices_of_dim(k)) {
      if (k == g.n) {
        reaches_top[id] = true;
        continue;
      }
      for (SimplexId cf : c.cofacets(id))
        if (reaches_top[cf]) reaches_top[id] = true;
    }
  }
  std::vector<SimplexId> offenders;
  for (SimplexId id = 0; id < static_cast<SimplexId>(c.size()); ++id)
    if (!reaches_top[id]) offenders.push_back(id);
  if (!offenders.empty())
    throw ConditionError(offenders, std::to_string(offenders.size()) +
                                        " simplices have no " + std::to_string(g.n) +
                                        "-dimensional coface");
  g.cells = c.simplices_of_dim(g.n);
  for (SimplexId face : c.simplices_of_dim(g.n - 1)) {
    auto cof = c.cofacets(face);
    if (cof.size() == 2)
      g.edges.push_back({face, cof[0], cof[1]});
    else if (cof.size() == 1)
      g.edges.push_back({face, cof[0], kOmegaInfinity});
    else
      throw ConditionError({face}, "face " + std::to_string(face) + " has " +
                                       std::to_string(cof.size()) + " cofaces");
  }
  return g;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), top_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(top_.begin(), top_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The tree root of x's component: its highest-ranked node.
  std::size_t root(std::size_t x) { return top_[find(x)]; }
  void merge(std::size_t a, std::size_t b, std::size_t new_top) {
    a = find(a);
    b = find(b);
    parent_[a] = b;
    top_[b] = new_top;
  }

 private:
  std::vector<std::size_t> parent_, top_;
};

}  // namespace

std::size_t PersistenceTree::node(SimplexId cell) const {
  if (cell == kOmegaInfinity) return cell_of_.size() - 1;
  if (cell < 0 || static_cast<std::size_t>(cell) >= node_of_.size() || node_of_[cell] < 0)
    throw DegreeError("simplex " + std::to_string(cell) + " is not a top-dimensional cell");
  return static_cast<std::size_t>(node_of_[cell]);
}

const std::vector<SimplexId>& PersistenceTree::children(SimplexId cell) const {
  return children_[node(cell)];
}

std::vector<SimplexId> PersistenceTree::descendants(SimplexId cell) const {
  std::vector<SimplexId> out, stack{cell};
  while (!stack.empty()) {
    SimplexId x = stack.back();
    stack.pop_back();
    if (x != kOmegaInfinity) out.push_back(x);
    for (SimplexId ch : children_[node(x)]) stack.push_back(ch);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PersistenceTree compute_tree(const DualGraph& g, const OrderWithLevel& o) {
  const SimplicialComplex& c = o.complex();
  PersistenceTree t;
  t.n_ = g.n;
  t.node_of_.assign(c.size(), -1);
  t.cell_of_ = g.cells;
  t.cell_of_.push_back(kOmegaInfinity);
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    t.node_of_[g.cells[i]] = static_cast<std::int32_t>(i);
  const std::size_t m = t.cell_of_.size(), inf = m - 1;
  t.links_.assign(m, {kNoSimplex, kNoSimplex});
  t.children_.assign(m, {});

  // Rank comparison with the cell at infinity as the maximum.
  auto node_rank = [&](std::size_t v) -> std::int64_t {
    return v == inf ? static_cast<std::int64_t>(o.size()) : o.rank(t.cell_of_[v]);
  };
  std::vector<const DualGraph::Edge*> edge_of(c.size(), nullptr);
  for (const auto& e : g.edges) edge_of[e.face] = &e;
  auto node_index = [&](SimplexId s) { return s == kOmegaInfinity ? inf : t.node(s); };

  UnionFind uf(m);
  for (std::int64_t r = static_cast<std::int64_t>(o.size()) - 1; r >= 0; --r) {
    SimplexId sigma = o.at(static_cast<std::int32_t>(r));
    if (c.dim(sigma) != g.n - 1) continue;
    const DualGraph::Edge* e = edge_of[sigma];
    std::size_t r1 = uf.root(node_index(e->a));
    std::size_t r2 = uf.root(node_index(e->b));
    if (r1 == r2) continue;
    std::size_t child = node_rank(r1) > node_rank(r2) ? r2 : r1;
    std::size_t parent = child == r1 ? r2 : r1;
    t.links_[child] = {t.cell_of_[parent], sigma};
    t.children_[parent].push_back(t.cell_of_[child]);
    uf.merge(child, parent, parent);
  }
  for (std::size_t v = 0; v + 1 < m; ++v)
    if (t.links_[v].parent == kNoSimplex)
      throw ConditionError({t.cell_of_[v]}, "dual graph is disconnected");

  // Subtree sizes: children always precede parents in rank.
  std::vector<std::size_t> by_rank(m);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](std::size_t a, std::size_t b) { return node_rank(a) < node_rank(b); });
  t.subtree_.assign(m, 1);
  for (std::size_t v : by_rank) {
    if (v == inf) continue;
    t.subtree_[node_index(t.links_[v].parent)] += t.subtree_[v];
  }
  t.subtree_[inf] -= 1;  // the cell at infinity is not a simplex

  for (std::size_t v = 0; v + 1 < m; ++v) {
    PersistencePair p;
    p.degree = g.n - 1;
    p.birth = t.links_[v].label;
    p.death = t.cell_of_[v];
    p.birth_time = o.level(p.birth);
    p.death_time = o.level(p.death);
    t.pairs_.push_back(p);
  }
  std::sort(t.pairs_.begin(), t.pairs_.end(), [&](const PersistencePair& a, const PersistencePair& b) {
    return o.rank(a.birth) < o.rank(b.birth);
  });
  return t;
}

namespace {

void check_tree_pair(const PersistenceTree& t, const PersistencePair& pair) {
  if (pair.degree != t.n() - 1)
    throw DegreeError("tree volumes exist only in degree " + std::to_string(t.n() - 1) +
                      ", got degree " + std::to_string(pair.degree));
  if (pair.essential()) throw StarPairError("pair has no death simplex");
  if (t.link(pair.death).label != pair.birth)
    throw DegreeError("pair is not a birth-death pair of this tree");
}

}  // namespace

std::vector<SimplexId> optimal_volume_tree(const PersistenceTree& t, const PersistencePair& pair) {
  check_tree_pair(t, pair);
  return t.descendants(pair.death);
}

Chain volume_boundary(const SimplicialComplex& c, const std::vector<SimplexId>& cells) {
  if (cells.empty()) return Chain(Field::Z2, 0);
  return boundary(c, Chain::from_ids(Field::Z2, c, cells));
}

StableVolumeResult stable_volume_tree(const PersistenceTree& t, const OrderWithLevel& o,
                                      const PersistencePair& pair, double eps) {
  check_tree_pair(t, pair);
  if (!(eps >= 0)) throw Error("noise bandwidth must be non-negative");
  StableVolumeResult out;
  out.pair = pair;
  out.epsilon = eps;
  out.cells.push_back(pair.death);
  const double birth_level = o.level(pair.birth);
  for (SimplexId child : t.children(pair.death)) {
    if (!above_band(o.level(t.link(child).label), birth_level, eps)) continue;
    std::vector<SimplexId> sub = t.descendants(child);
    out.cells.insert(out.cells.end(), sub.begin(), sub.end());
  }
  std::sort(out.cells.begin(), out.cells.end());
  out.boundary = volume_boundary(o.complex(), out.cells);
  return out;
}

std::vector<std::pair<double, std::size_t>> sweep_sizes(const PersistenceTree& t,
                                                        const OrderWithLevel& o,
                                                        const PersistencePair& pair,
                                                        const std::vector<double>& grid) {
  check_tree_pair(t, pair);
  const double birth_level = o.level(pair.birth);
  std::vector<std::pair<double, std::size_t>> out;
  out.reserve(grid.size());
  const auto& kids = t.children(pair.death);
  for (double eps : grid) {
    std::size_t size = 1;
    for (SimplexId child : kids)
      if (above_band(o.level(t.link(child).label), birth_level, eps)) size += t.subtree_size(child);
    out.emplace_back(eps, size);
  }
  return out;
}

}  // namespace stablevol
