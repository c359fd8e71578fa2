// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef STABLEVOL_CHAIN_HPP
#define STABLEVOL_CHAIN_HPP

#include <map>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "stablevol/complex.hpp"

namespace stablevol {

enum class Field { Z2, Rational };

using Rational = boost::rational<long long>;

/// A finite formal sum of same-dimension simplices. Only nonzero
/// coefficients are stored; over Z/2 every stored coefficient is 1.
class Chain {
 public:
  Chain(Field field, int dim) : field_(field), dim_(dim) {}

  /// Sum of the given simplices with coefficient 1.
  static Chain from_ids(Field field, const SimplicialComplex& c, std::span<const SimplexId> ids);

  Field field() const { return field_; }
  int dim() const { return dim_; }
  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }

  /// Adds coeff * simplex; over Z/2 only the parity of coeff matters.
  void add(SimplexId id, Rational coeff);
  Rational coefficient(SimplexId id) const;
  const std::map<SimplexId, Rational>& terms() const { return support_; }
  std::vector<SimplexId> support() const;

  bool operator==(const Chain&) const = default;

 private:
  Field field_;
  int dim_;
  std::map<SimplexId, Rational> support_;
};

/// Boundary with alternating signs on the sorted vertex list (dropped over
/// Z/2). Throws DimensionError for 0-chains and chains whose simplices do not
/// match the chain dimension or whose faces are missing from the complex.
Chain boundary(const SimplicialComplex& c, const Chain& chain);

/// Signed incidence tau*(d omega) for a codimension-one face, 0 otherwise.
int incidence(const SimplicialComplex& c, SimplexId coface, SimplexId face);

}  // namespace stablevol

#endif  // STABLEVOL_CHAIN_HPP
