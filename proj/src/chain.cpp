// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/chain.hpp"

#include <string>

namespace stablevol {

Chain Chain::from_ids(Field field, const SimplicialComplex& c, std::span<const SimplexId> ids) {
  if (ids.empty()) throw DimensionError("cannot infer chain dimension from an empty id list");
  Chain out(field, c.dim(ids.front()));
  for (SimplexId id : ids) {
    if (c.dim(id) != out.dim_) throw DimensionError("chain simplices have mixed dimensions");
    out.add(id, 1);
  }
  return out;
}

void Chain::add(SimplexId id, Rational coeff) {
  if (field_ == Field::Z2) {
    if (coeff.denominator() != 1) throw DimensionError("fractional coefficient over Z/2");
    if (coeff.numerator() % 2 == 0) return;
    auto it = support_.find(id);
    if (it == support_.end())
      support_.emplace(id, Rational(1));
    else
      support_.erase(it);
    return;
  }
  if (coeff.numerator() == 0) return;
  auto [it, inserted] = support_.emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.numerator() == 0) support_.erase(it);
  }
}

Rational Chain::coefficient(SimplexId id) const {
  auto it = support_.find(id);
  return it == support_.end() ? Rational(0) : it->second;
}

std::vector<SimplexId> Chain::support() const {
  std::vector<SimplexId> out;
  out.reserve(support_.size());
  for (const auto& [id, coeff] : support_) out.push_back(id);
  return out;
}

Chain boundary(const SimplicialComplex& c, const Chain& chain) {
  if (chain.dim() < 1) throw DimensionError("boundary of a 0-chain");
  Chain out(chain.field(), chain.dim() - 1);
  for (const auto& [id, coeff] : chain.terms()) {
    if (c.dim(id) != chain.dim())
      throw DimensionError("simplex " + std::to_string(id) + " does not match chain dimension");
    auto facets = c.facets(id);
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (facets[i] == kNoSimplex) throw DimensionError("boundary face missing from complex");
      Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      out.add(facets[i], chain.field() == Field::Z2 ? Rational(1) : sign * coeff);
    }
  }
  return out;
}

int incidence(const SimplicialComplex& c, SimplexId coface, SimplexId face) {
  auto facets = c.facets(coface);
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i] == face) return (i % 2 == 0) ? 1 : -1;
  return 0;
}

}  // namespace stablevol
