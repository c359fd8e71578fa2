// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include <memory>

#include "stablevol/chain.hpp"
#include "stablevol/complex.hpp"

using namespace stablevol;

namespace {

std::shared_ptr<const SimplicialComplex> filled_triangle() {
  std::vector<Simplex> gens{Simplex{0, 1, 2}};
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::closure(gens));
}

}  // namespace

TEST_CASE("simplex vertices are sorted and facets omit one vertex each") {
  Simplex s{2, 0, 1};
  CHECK(s.dim() == 2);
  CHECK(s[0] == 0);
  CHECK(s[2] == 2);
  auto f = s.facets();
  REQUIRE(f.size() == 3);
  CHECK(f[0] == Simplex{1, 2});
  CHECK(f[1] == Simplex{0, 2});
  CHECK(f[2] == Simplex{0, 1});
  CHECK(Simplex{0, 2}.is_face_of(s));
  CHECK_FALSE(Simplex{0, 3}.is_face_of(s));
  CHECK_THROWS_AS(Simplex({1, 1}), Error);
  CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), Error);
}

TEST_CASE("complex indexes facets and sorted cofacets") {
  auto c = filled_triangle();
  CHECK(c->size() == 7);
  CHECK(c->dim() == 2);
  CHECK(c->vertex_count() == 3);
  SimplexId tri = c->find(Simplex{0, 1, 2});
  REQUIRE(tri != kNoSimplex);
  auto facets = c->facets(tri);
  CHECK(facets[0] == c->find(Simplex{1, 2}));
  CHECK(facets[2] == c->find(Simplex{0, 1}));
  SimplexId v0 = c->find(Simplex{0});
  auto cof = c->cofacets(v0);
  CHECK(cof.size() == 2);
  CHECK(std::is_sorted(cof.begin(), cof.end()));
  CHECK(c->find(Simplex{3}) == kNoSimplex);
  CHECK(validate_complex(*c).ok);
}

TEST_CASE("duplicate simplices are rejected and missing faces reported") {
  CHECK_THROWS_AS(SimplicialComplex({Simplex{0}, Simplex{0}}), ComplexError);
  SimplicialComplex open({Simplex{0}, Simplex{1}, Simplex{0, 1, 2}});
  ValidationReport r = validate_complex(open);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.size() >= 3);  // {2}, {0,1}, {0,2}, {1,2}
  ValidationReport capped = validate_complex(open, 2);
  CHECK(capped.violations.size() == 2);
}

TEST_CASE("build_order breaks ties by dimension then vertex list") {
  auto c = filled_triangle();
  std::vector<double> level(c->size(), 1.0);
  OrderWithLevel o = build_order(c, level);
  for (std::size_t r = 1; r < o.size(); ++r) {
    const Simplex& a = c->simplex(o.at(static_cast<std::int32_t>(r - 1)));
    const Simplex& b = c->simplex(o.at(static_cast<std::int32_t>(r)));
    CHECK((a.dim() < b.dim() || (a.dim() == b.dim() && a < b)));
  }
  CHECK(o.rank(c->find(Simplex{0, 1, 2})) == 6);
}

TEST_CASE("levels that drop from a face to a coface are rejected") {
  auto c = filled_triangle();
  std::vector<double> level(c->size(), 0.0);
  level[c->find(Simplex{0, 1})] = 2.0;
  level[c->find(Simplex{0, 1, 2})] = 1.0;
  try {
    build_order(c, level);
    FAIL("expected MonotonicityError");
  } catch (const MonotonicityError& e) {
    CHECK(e.face() == c->find(Simplex{0, 1}));
    CHECK(e.coface() == c->find(Simplex{0, 1, 2}));
  }
}

TEST_CASE("from_sequence checks face-before-coface and sortedness") {
  auto c = filled_triangle();
  std::vector<double> level(c->size(), 0.0);
  std::vector<SimplexId> seq(c->size());
  for (SimplexId i = 0; i < static_cast<SimplexId>(c->size()); ++i) seq[i] = i;
  // closure() orders by dimension, so the identity is a valid filtration
  CHECK_NOTHROW(OrderWithLevel::from_sequence(c, level, seq));
  std::reverse(seq.begin(), seq.end());
  CHECK_THROWS_AS(OrderWithLevel::from_sequence(c, level, seq), MonotonicityError);
  std::vector<SimplexId> short_seq{0, 1};
  CHECK_THROWS(OrderWithLevel::from_sequence(c, level, short_seq));
}

TEST_CASE("sublevel and prefix complexes") {
  auto c = filled_triangle();
  std::vector<double> level(c->size(), 0.0);
  for (SimplexId s = 0; s < static_cast<SimplexId>(c->size()); ++s) level[s] = c->dim(s);
  OrderWithLevel o = build_order(c, level);
  CHECK(sublevel_complex(o, 1.0).size() == 3);
  CHECK(sublevel_complex(o, 2.0).size() == 6);
  CHECK(prefix_complex(o, 4).size() == 4);
}

TEST_CASE("boundary of a boundary vanishes over both fields") {
  std::vector<Simplex> gens{Simplex{0, 1, 2, 3}};
  SimplicialComplex c = SimplicialComplex::closure(gens);
  for (Field f : {Field::Z2, Field::Rational}) {
    Chain tet(f, 3);
    tet.add(c.find(Simplex{0, 1, 2, 3}), 1);
    Chain b = boundary(c, tet);
    CHECK(b.size() == 4);
    CHECK(boundary(c, b).empty());
  }
  Chain z(Field::Rational, 1);
  z.add(c.find(Simplex{0, 1}), 1);
  z.add(c.find(Simplex{1, 2}), 1);
  z.add(c.find(Simplex{0, 2}), -1);
  CHECK(boundary(c, z).empty());
  CHECK(incidence(c, c.find(Simplex{0, 1, 2}), c.find(Simplex{0, 2})) == -1);
  CHECK(incidence(c, c.find(Simplex{0, 1, 2}), c.find(Simplex{1, 2})) == 1);
  CHECK(incidence(c, c.find(Simplex{0, 1, 2}), c.find(Simplex{0})) == 0);
  CHECK_THROWS_AS(boundary(c, Chain(Field::Z2, 0)), DimensionError);
}

TEST_CASE("Z/2 chains cancel on even coefficients") {
  std::vector<Simplex> gens{Simplex{0, 1}};
  SimplicialComplex c = SimplicialComplex::closure(gens);
  Chain a(Field::Z2, 0);
  a.add(0, 1);
  a.add(0, 1);
  CHECK(a.empty());
  a.add(1, 3);
  CHECK(a.coefficient(1) == Rational(1));
}
