// Licensed under the Apache License 2.0 (see LICENSE file).

#include "stablevol/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace stablevol {

namespace {

std::string describe(const Simplex& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ComplexError("simplex with no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ComplexError("simplex with repeated vertex " + describe(*this));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    Simplex f;
    f.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != skip) f.vertices_.push_back(vertices_[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (VertexId v : s.vertices()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices)
    : simplices_(std::move(simplices)) {
  index_.reserve(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    auto [it, inserted] = index_.emplace(simplices_[i], static_cast<SimplexId>(i));
    if (!inserted) throw ComplexError("duplicate simplex " + describe(simplices_[i]));
    dim_ = std::max(dim_, simplices_[i].dim());
  }
  facets_.resize(simplices_.size());
  cofacets_.resize(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    for (const Simplex& f : simplices_[i].facets()) {
      SimplexId fid = find(f);
      facets_[i].push_back(fid);
      if (fid != kNoSimplex) cofacets_[fid].push_back(static_cast<SimplexId>(i));
    }
  }
  for (auto& cf : cofacets_) std::sort(cf.begin(), cf.end());
}

SimplicialComplex SimplicialComplex::closure(std::span<const Simplex> generators) {
  std::set<std::pair<int, Simplex>> all;
  std::vector<Simplex> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    int d = s.dim();
    if (!all.emplace(d, s).second) continue;
    for (Simplex& f : s.facets()) stack.push_back(std::move(f));
  }
  std::vector<Simplex> ordered;
  ordered.reserve(all.size());
  for (const auto& entry : all) ordered.push_back(entry.second);
  return SimplicialComplex(std::move(ordered));
}

SimplexId SimplicialComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? kNoSimplex : it->second;
}

std::vector<SimplexId> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<SimplexId> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i)
    if (simplices_[i].dim() == k) out.push_back(static_cast<SimplexId>(i));
  return out;
}

std::size_t SimplicialComplex::vertex_count() const {
  return static_cast<std::size_t>(std::count_if(
      simplices_.begin(), simplices_.end(), [](const Simplex& s) { return s.dim() == 0; }));
}

ValidationReport validate_complex(const SimplicialComplex& c, std::size_t max_reported) {
  ValidationReport report;
  for (SimplexId id = 0; id < static_cast<SimplexId>(c.size()); ++id) {
    std::vector<Simplex> expected = c.simplex(id).facets();
    auto facets = c.facets(id);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      SimplexId fid = i < facets.size() ? facets[i] : kNoSimplex;
      if (fid == kNoSimplex) {
        report.ok = false;
        if (report.violations.size() < max_reported)
          report.violations.push_back({id, expected[i]});
        continue;
      }
      auto cof = c.cofacets(fid);
      bool consistent = std::binary_search(cof.begin(), cof.end(), id) &&
                        c.simplex(fid) == expected[i];
      if (!consistent) {
        report.ok = false;
        if (report.violations.size() < max_reported)
          report.violations.push_back({id, expected[i]});
      }
    }
  }
  return report;
}

OrderWithLevel OrderWithLevel::from_sequence(std::shared_ptr<const SimplicialComplex> complex,
                                             std::vector<double> level,
                                             std::vector<SimplexId> sequence) {
  const std::size_t n = complex->size();
  if (level.size() != n || sequence.size() != n)
    throw ComplexError("order size does not match complex size");
  OrderWithLevel o;
  o.rank_.assign(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    SimplexId id = sequence[r];
    if (id < 0 || static_cast<std::size_t>(id) >= n || o.rank_[id] != -1)
      throw ComplexError("order sequence is not a permutation of the simplices");
    o.rank_[id] = static_cast<std::int32_t>(r);
  }
  for (std::size_t r = 1; r < n; ++r) {
    if (level[sequence[r - 1]] > level[sequence[r]])
      throw MonotonicityError(sequence[r - 1], sequence[r],
                              "order is not sorted by level at rank " + std::to_string(r));
  }
  for (SimplexId id = 0; id < static_cast<SimplexId>(n); ++id) {
    for (SimplexId f : complex->facets(id)) {
      if (f == kNoSimplex) continue;
      if (level[f] > level[id] || o.rank_[f] > o.rank_[id])
        throw MonotonicityError(f, id,
                                "face " + describe(complex->simplex(f)) +
                                    " is not before coface " + describe(complex->simplex(id)));
    }
  }
  o.complex_ = std::move(complex);
  o.level_ = std::move(level);
  o.sequence_ = std::move(sequence);
  return o;
}

OrderWithLevel build_order(std::shared_ptr<const SimplicialComplex> c, std::vector<double> level,
                           TieBreak tiebreak) {
  if (level.size() != c->size()) throw ComplexError("level map size does not match complex");
  for (SimplexId id = 0; id < static_cast<SimplexId>(c->size()); ++id) {
    for (SimplexId f : c->facets(id)) {
      if (f != kNoSimplex && level[f] > level[id]) {
        throw MonotonicityError(f, id,
                                "level of face " + describe(c->simplex(f)) + " exceeds coface " +
                                    describe(c->simplex(id)));
      }
    }
  }
  std::vector<SimplexId> seq(c->size());
  std::iota(seq.begin(), seq.end(), 0);
  switch (tiebreak) {
    case TieBreak::DimensionThenLex:
      std::sort(seq.begin(), seq.end(), [&](SimplexId a, SimplexId b) {
        if (level[a] != level[b]) return level[a] < level[b];
        int da = c->dim(a), db = c->dim(b);
        if (da != db) return da < db;
        return c->simplex(a) < c->simplex(b);
      });
      break;
  }
  return OrderWithLevel::from_sequence(std::move(c), std::move(level), std::move(seq));
}

namespace {

SimplicialComplex select(const SimplicialComplex& c, const std::vector<bool>& keep) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (keep[i]) out.push_back(c.simplex(static_cast<SimplexId>(i)));
  return SimplicialComplex(std::move(out));
}

}  // namespace

SimplicialComplex sublevel_complex(const OrderWithLevel& o, double t) {
  std::vector<bool> keep(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) keep[i] = o.level(static_cast<SimplexId>(i)) < t;
  return select(o.complex(), keep);
}

SimplicialComplex prefix_complex(const OrderWithLevel& o, std::size_t prefix_length) {
  std::vector<bool> keep(o.size());
  for (std::size_t i = 0; i < o.size(); ++i)
    keep[i] = static_cast<std::size_t>(o.rank(static_cast<SimplexId>(i))) < prefix_length;
  return select(o.complex(), keep);
}

}  // namespace stablevol
