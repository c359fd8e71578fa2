// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_COMPLEX_HPP
#define STABLEVOL_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "stablevol/errors.hpp"

namespace stablevol {

/// A simplex as a strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; throws ComplexError on duplicates or an empty list.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  /// Codimension-one faces; face i omits vertex i.
  std::vector<Simplex> facets() const;
  bool is_face_of(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// An indexed collection of simplices with codimension-one incidences.
///
/// Ids are dense and follow the construction order. The facet list of a
/// simplex is indexed by the omitted vertex position, so facet i carries the
/// sign (-1)^i in the oriented boundary; a missing facet is kNoSimplex.
/// Construction does not require closure; validate_complex reports it.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Simplex> simplices);

  /// All faces of the given simplices, ordered by (dimension, vertex list).
  static SimplicialComplex closure(std::span<const Simplex> generators);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int dim() const { return dim_; }
  const Simplex& simplex(SimplexId id) const { return simplices_[id]; }
  int dim(SimplexId id) const { return simplices_[id].dim(); }
  const std::vector<Simplex>& simplices() const { return simplices_; }

  SimplexId find(const Simplex& s) const;
  std::span<const SimplexId> facets(SimplexId id) const { return facets_[id]; }
  std::span<const SimplexId> cofacets(SimplexId id) const { return cofacets_[id]; }
  std::vector<SimplexId> simplices_of_dim(int k) const;
  /// Number of 0-simplices.
  std::size_t vertex_count() const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::vector<SimplexId>> facets_;
  std::vector<std::vector<SimplexId>> cofacets_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
  int dim_ = -1;
};

struct Violation {
  SimplexId simplex;
  Simplex missing_face;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Closure and incidence check; at most max_reported missing faces are listed.
ValidationReport validate_complex(const SimplicialComplex& c,
                                  std::size_t max_reported = 16);

enum class TieBreak {
  /// Equal levels ordered by dimension, then lexicographic vertex list.
  DimensionThenLex,
};

/// A level function paired with a total order refining it (an order with
/// level). Ranks are 0-based positions in the filtration sequence.
class OrderWithLevel {
 public:
  OrderWithLevel() = default;

  /// Checks both order-with-level invariants against the given sequence.
  /// Throws MonotonicityError when a face follows or out-levels a coface.
  static OrderWithLevel from_sequence(std::shared_ptr<const SimplicialComplex> complex,
                                      std::vector<double> level,
                                      std::vector<SimplexId> sequence);

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  std::size_t size() const { return sequence_.size(); }

  double level(SimplexId id) const { return level_[id]; }
  const std::vector<double>& levels() const { return level_; }
  std::int32_t rank(SimplexId id) const { return rank_[id]; }
  SimplexId at(std::int32_t rank) const { return sequence_[rank]; }
  const std::vector<SimplexId>& sequence() const { return sequence_; }
  bool precedes(SimplexId a, SimplexId b) const { return rank_[a] < rank_[b]; }

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  std::vector<double> level_;
  std::vector<SimplexId> sequence_;
  std::vector<std::int32_t> rank_;
};

/// Sorts by (level, tie-break). The level map must be monotone under face
/// inclusion; otherwise MonotonicityError names the offending pair.
OrderWithLevel build_order(std::shared_ptr<const SimplicialComplex> c,
                           std::vector<double> level,
                           TieBreak tiebreak = TieBreak::DimensionThenLex);

/// Simplices with level strictly below t, re-indexed in original id order.
SimplicialComplex sublevel_complex(const OrderWithLevel& o, double t);

/// Simplices with rank < prefix_length, as a complex.
SimplicialComplex prefix_complex(const OrderWithLevel& o, std::size_t prefix_length);

}  // namespace stablevol

#endif  // STABLEVOL_COMPLEX_HPP
