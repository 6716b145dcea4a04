#include <algorithm>

#include "doctest.h"
#include "lmsb/error.hpp"
#include "lmsb/model.hpp"

using namespace lmsb;

namespace {

LatticePolytope hull(std::vector<IVec> v) { return LatticePolytope::from_points(std::move(v)); }

std::vector<IVec> sorted(std::vector<IVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}


}  // namespace

TEST_CASE("integral points ordering") {
  auto pts = integral_points(hull({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(pts == std::vector<IVec>{{0, 0}, {-1, -1}, {0, 1}, {1, 0}});
  CHECK(integral_points(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})).size() == 5);
  CHECK(integral_points(hull({{2, -1}, {-1, 2}, {-1, -1}})).size() == 10);
  // non-vertex input points are dropped from the vertex list
  CHECK(hull({{1, 0}, {0, 1}, {-2, -1}, {-1, 0}, {0, 0}}).vertices().size() == 3);
}

TEST_CASE("reflexivity and duality") {
  auto p2 = hull({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(is_reflexive(p2));
  CHECK(sorted(dual_polytope(p2).vertices()) == sorted({{2, -1}, {-1, 2}, {-1, -1}}));
  auto diamond = hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(sorted(dual_polytope(diamond).vertices()) == sorted({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  CHECK_FALSE(is_reflexive(hull({{2, 0}, {0, 2}, {-2, -2}})));
  try {
    is_reflexive(hull({{1, 0}, {0, 1}, {1, 1}}));
    FAIL("expected origin-not-interior");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::origin_not_interior);
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(hull({{1, 0}, {0, 1}, {-1, -1}})) == 3);
  CHECK(normalized_volume(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})) == 4);
  CHECK(normalized_volume(hull({{0, 0}, {3, 3}})) == 0);
}

TEST_CASE("sixteen reflexive polygons") {
  auto all = reflexive_polygons();
  CHECK(all.size() == 16);
  for (auto& p : all) {
    REQUIRE(is_reflexive(p));
    auto d = dual_polytope(p);
    CHECK(is_reflexive(d));
    CHECK(sorted(dual_polytope(d).vertices()) == sorted(p.vertices()));
    long l = static_cast<long>(integral_points(p).size());
    long ld = static_cast<long>(integral_points(d).size());
    CHECK(normalized_volume(p) == l - 1);
    CHECK(normalized_volume(d) == ld - 1);
    CHECK((l - 1) + (ld - 1) == 12);
    auto rl = lattice_of_relations(p);
    CHECK(static_cast<long>(rl.basis.size()) == l - 3);
    auto pts = integral_points(p);
    for (auto& r : rl.basis) {
      int s = 0, x = 0, y = 0;
      for (std::size_t m = 0; m < pts.size(); ++m) {
        s += r[m];
        x += r[m] * pts[m][0];
        y += r[m] * pts[m][1];
      }
      CHECK(s == 0);
      CHECK(x == 0);
      CHECK(y == 0);
    }
    CHECK(is_relation_basis(pts, rl.basis));
  }
}

TEST_CASE("lattice of relations") {
  auto p2 = hull({{1, 0}, {0, 1}, {-1, -1}});
  auto rl = lattice_of_relations(p2);
  REQUIRE(rl.basis.size() == 1);
  // points (0,0),(-1,-1),(0,1),(1,0)
  CHECK((rl.basis[0] == IVec{-3, 1, 1, 1} || rl.basis[0] == IVec{3, -1, -1, -1}));
  std::vector<IVec> f0{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(is_relation_basis(f0, {{-2, 1, 0, 1, 0}, {-2, 0, 1, 0, 1}}));
  CHECK_FALSE(is_relation_basis(f0, {{-2, 1, 0, 1, 0}, {-4, 0, 2, 0, 2}}));
  CHECK_FALSE(is_relation_basis(f0, {{-2, 1, 0, 1, 0}, {-2, 0, 1, 1, 0}}));
}

TEST_CASE("registry models load and are consistent") {
  for (auto name : {"p2", "f0", "f1", "f2"}) {
    const ModelData& m = load_model(name);
    CHECK(m.k == static_cast<int>(m.points.size()) - 3);
    CHECK(is_relation_basis(m.points, m.relations.basis));
    CHECK(is_reflexive(m.polytope));
    CHECK(m.yukawa.size() == static_cast<std::size_t>(m.k * (m.k + 1) / 2));
  }
  CHECK(load_model("f0").relations.basis == std::vector<IVec>{{-2, 1, 0, 1, 0}, {-2, 0, 1, 0, 1}});
  CHECK(load_model("p2").c() == std::vector<int>{3});
  CHECK(load_model("f2").c() == std::vector<int>{2, 0});
  CHECK_THROWS_AS(load_model("nope"), Error);
}

TEST_CASE("f11 registry data equals -(1/12) theta0 d / d + 1/6") {
  for (auto name : {"f0", "f1", "f2"}) {
    const ModelData& m = load_model(name);
    RationalFunction d(*m.discriminant_z);
    RationalFunction th0d(Poly(m.k));
    auto l0 = m.l0();
    for (int i = 0; i < m.k; ++i) th0d += d.theta(i) * Rational(l0[i]);
    RationalFunction expect = th0d / d * Rational(-1, 12) + RationalFunction(m.k, Rational(1, 6));
    CHECK(*m.f11 == expect);
  }
}

TEST_CASE("regularity from registry discriminants") {
  const ModelData& p2 = load_model("p2");
  CHECK(is_regular(p2, {1, 1, 1, 1}));
  CHECK_FALSE(is_regular(p2, {-3, 1, 1, 1}));
  CHECK_FALSE(is_regular(p2, {1, 0, 1, 1}));
  const ModelData& f0 = load_model("f0");
  CHECK(is_regular(f0, {1, 1, 1, 1, 1}));
  CHECK_FALSE(is_regular(f0, {4, 1, 1, 1, 1}));  // (16-8)^2-64 = 0
}
