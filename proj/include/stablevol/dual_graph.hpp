// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_DUAL_GRAPH_HPP
#define STABLEVOL_DUAL_GRAPH_HPP

#include <utility>
#include <vector>

#include "stablevol/chain.hpp"
#include "stablevol/persistence.hpp"

namespace stablevol {

/// Node id of the cell at infinity (the complement of |X| in the sphere).
inline constexpr SimplexId kOmegaInfinity = -2;

/// Dual graph of an n-dimensional complex embedded in R^n: nodes are the
/// n-simplices plus the cell at infinity, edges are the (n-1)-simplices.
struct DualGraph {
  struct Edge {
    SimplexId face;  // the (n-1)-simplex
    SimplexId a;     // n-simplex
    SimplexId b;     // n-simplex or kOmegaInfinity
  };

  int n = 0;
  std::vector<SimplexId> cells;
  std::vector<Edge> edges;
};

/// Throws ConditionError when some simplex has no n-dimensional coface or an
/// (n-1)-simplex has more than two.
DualGraph build_dual_graph(const OrderWithLevel& o);

/// Merge tree of the descending sweep over the dual graph. Every n-simplex
/// has exactly one parent; the cell at infinity is the root.
class PersistenceTree {
 public:
  struct Link {
    SimplexId parent;  // n-simplex or kOmegaInfinity
    SimplexId label;   // (n-1)-simplex joining the two components
  };

  int n() const { return n_; }
  const Link& link(SimplexId cell) const { return links_[node(cell)]; }
  const std::vector<SimplexId>& children(SimplexId cell) const;
  std::size_t subtree_size(SimplexId cell) const { return subtree_[node(cell)]; }
  /// The cell and all its descendants, sorted by id.
  std::vector<SimplexId> descendants(SimplexId cell) const;
  /// Degree n-1 pairs (label, child) read off the tree edges, including
  /// zero-persistence ones, sorted by birth rank.
  const std::vector<PersistencePair>& pairs() const { return pairs_; }

 private:
  friend PersistenceTree compute_tree(const DualGraph& g, const OrderWithLevel& o);
  std::size_t node(SimplexId cell) const;

  int n_ = 0;
  std::vector<std::int32_t> node_of_;  // simplex id -> node index, -1 if not a cell
  std::vector<SimplexId> cell_of_;     // node index -> simplex id (last = infinity)
  std::vector<Link> links_;
  std::vector<std::vector<SimplexId>> children_;
  std::vector<std::size_t> subtree_;
  std::vector<PersistencePair> pairs_;
};

PersistenceTree compute_tree(const DualGraph& g, const OrderWithLevel& o);

/// True when level(face) >= birth_level + eps. Shared by the tree and the
/// optimization formulations so both read the threshold identically.
inline bool above_band(double level, double birth_level, double eps) {
  return level >= birth_level + eps;
}

struct StableVolumeResult {
  PersistencePair pair;
  double epsilon = 0;
  std::vector<SimplexId> cells;  // sorted ids, includes the death simplex
  Chain boundary{Field::Z2, 0};
  std::size_t size() const { return cells.size(); }
};

/// Descendants of the death simplex. Throws DegreeError / StarPairError.
std::vector<SimplexId> optimal_volume_tree(const PersistenceTree& t, const PersistencePair& pair);

StableVolumeResult stable_volume_tree(const PersistenceTree& t, const OrderWithLevel& o,
                                      const PersistencePair& pair, double eps);

/// Stable volume sizes over a strictly increasing grid, from subtree sizes.
std::vector<std::pair<double, std::size_t>> sweep_sizes(const PersistenceTree& t,
                                                        const OrderWithLevel& o,
                                                        const PersistencePair& pair,
                                                        const std::vector<double>& grid);

/// Z/2 boundary of the sum of the given cells.
Chain volume_boundary(const SimplicialComplex& c, const std::vector<SimplexId>& cells);

}  // namespace stablevol

#endif  // STABLEVOL_DUAL_GRAPH_HPP
