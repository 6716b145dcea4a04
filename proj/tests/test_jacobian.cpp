#include <random>

#include "doctest.h"
#include "lmsb/error.hpp"
#include "lmsb/jacobian.hpp"

using namespace lmsb;

namespace {
std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("graded ring pieces") {
  auto& m = load_model("p2");
  GradedRing r(m, 3);
  CHECK(r.piece(0).size() == 1);
  CHECK(r.piece(1).size() == 4);
  CHECK(r.piece(2).size() == 10);
  CHECK(r.piece(3).size() == 19);
  CHECK(r.in_ideal({1, {0, 0}}, 1));
  CHECK_FALSE(r.in_ideal({1, {1, 0}}, 1));
  CHECK(r.in_ideal({2, {1, 0}}, 1));
  CHECK_FALSE(r.in_ideal({2, {2, 0}}, 2));
  CHECK(r.in_ideal({2, {1, 1}}, 2));
  CHECK_FALSE(r.in_ideal({0, {0, 0}}, 3));
  CHECK(r.in_ideal({0, {0, 0}}, 4));
}

TEST_CASE("R_F dimensions at random regular points") {
  for (const char* n : {"p2", "f0", "f1", "f2"}) {
    auto& m = load_model(n);
    std::mt19937_64 rng(2024);
    int l = static_cast<int>(m.points.size());
    for (int t = 0; t < 20; ++t) {
      auto a = random_regular_point(m, rng);
      CHECK(rf_dimensions(m, a) == std::vector<int>{1, l - 3, 1, 0});
    }
  }
}

TEST_CASE("non-regular point is rejected") {
  auto& m = load_model("p2");
  CHECK_THROWS_AS(rf_dimensions(m, ints({-3, 1, 1, 1})), Error);
  try {
    rf_dimensions(m, ints({-3, 1, 1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_regular);
  }
  CHECK_THROWS(Reducer(m, ints({-3, 1, 1, 1})));
}

TEST_CASE("filtration tables") {
  for (const char* n : {"p2", "f0", "f1", "f2"}) {
    auto& m = load_model(n);
    int l = static_cast<int>(m.points.size());
    auto t = filtration_tables(m);
    CAPTURE(n);
    CHECK(t.I[1] == 2);
    CHECK(t.I[3] == l - 2);
    CHECK(t.I[4] == l - 1);
    CHECK(t.I[2] == (std::string(n) == "f2" ? t.I[3] : t.I[1]));
    CHECK(t.E == std::vector<int>{1, l - 2, l - 1});
    CHECK(t.weight == std::vector<int>{2, l - 4, 0, 1});
    CHECK(t.relative_hodge == std::vector<int>{1, l - 2, l - 1});
    CHECK(t.hodge_numbers[1][1] == l - 1);
    CHECK(t.hodge_numbers[1][2] == 1);
  }
}

TEST_CASE("parameter derivatives commute with D_i") {
  for (const char* n : {"p2", "f1"}) CHECK(d_operators_commute(load_model(n), 3));
}

TEST_CASE("parameter action respects both filtrations") {
  for (const char* n : {"p2", "f0", "f1", "f2"}) CHECK(parameter_action_compatible(load_model(n)));
}

TEST_CASE("normal form and xi") {
  auto& m = load_model("p2");
  auto nf = normal_form(m);
  CHECK(verify_normal_form(m, nf, 3, 99));
  CHECK(nf.gamma == parse_ratfun("-a0/(a0^3+27*a1*a2*a3)", m.a));
  CHECK(nf.delta == parse_ratfun("-3*a0^2/(a0^3+27*a1*a2*a3)", m.a));
  auto om = xi_log_derivatives(m, nf);
  CHECK(xi_closed(m, om));
  auto xi = xi_normalization(m, nf);
  CHECK(xi.xi == parse_ratfun("1/(a0^3+27*a1*a2*a3)", m.a));
  CHECK(to_z(m, parse_ratfun("a0^3", m.a) * xi.xi) == parse_ratfun("1/(1+27*z)", m.z));
}

TEST_CASE("xi for the Hirzebruch models") {
  const std::pair<const char*, const char*> cases[] = {
      {"f0", "a0/(a0^4-8*a0^2*a1*a3-8*a0^2*a2*a4+16*a1^2*a3^2-32*a1*a2*a3*a4+16*a2^2*a4^2)"},
      {"f1", "(8*a0*a3-9*a2*a4)/(8*(a0^4*a3-a0^3*a2*a4-8*a0^2*a1*a3^2+36*a0*a1*a2*a3*a4+16*a1^2*a3^3-27*a1*a2^2*a4^2))"},
      {"f2", "a0/(a0^4-8*a0^2*a1*a3-64*a1^2*a2*a4+16*a1^2*a3^2)"},
  };
  for (auto [n, expect] : cases) {
    auto& m = load_model(n);
    auto nf = normal_form(m);
    CHECK(verify_normal_form(m, nf, 2, 5));
    auto xi = xi_normalization(m, nf);
    CHECK(xi.xi == parse_ratfun(expect, m.a));
  }
}

TEST_CASE("algebraic Yukawa couplings agree with the closed forms") {
  const std::pair<const char*, Rational> cases[] = {
      {"p2", Rational(1, 9)}, {"f0", Rational(1, 8)}, {"f1", Rational(1, 8)}, {"f2", Rational(1, 8)}};
  for (auto& [n, c] : cases) {
    auto& m = load_model(n);
    auto nf = normal_form(m);
    auto y = algebraic_yukawa(m, nf, xi_normalization(m, nf));
    CAPTURE(n);
    CHECK(y.matches);
    CHECK(y.constant == c);
  }
}

TEST_CASE("rational interpolation") {
  // f(u) = (1+u0)/(2-u1)
  std::vector<std::pair<std::vector<Rational>, Rational>> s;
  for (int i = 0; i < 30; ++i) {
    Rational u0(i % 7 + 3), u1(i / 7 * 5 + i % 3 + 4);
    s.push_back({{u0, u1}, (1 + u0) / (2 - u1)});
  }
  auto f = rational_interpolate(s, 2, 1);
  CHECK(f == parse_ratfun("(1+u0)/(2-u1)", {"u0", "u1"}));
  CHECK_THROWS(rational_interpolate(s, 2, 0));
}
