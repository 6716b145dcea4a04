#include "doctest.h"
#include "lmsb/error.hpp"
#include "lmsb/linalg.hpp"
#include "lmsb/series.hpp"

using namespace lmsb;

namespace {

const Names kz{"z"};
const Names kz12{"z1", "z2"};

RationalFunction rf(const char* s, const Names& n = kz) { return parse_ratfun(s, n); }

// 3H(z) from the closed factorial formula: 3 * sum (3n-1)!/(n!)^3 (-z)^n
MultiSeries three_h(int order) {
  MultiSeries s(1, order);
  for (int n = 1; n <= order; ++n) {
    Integer f = 1, g = 1;
    for (int j = 1; j <= 3 * n - 1; ++j) f *= j;
    for (int j = 1; j <= n; ++j) g *= j;
    Rational c(f, g * g * g);
    c.canonicalize();
    s.set(Mono{n}, (n % 2 ? -3 : 3) * c);
  }
  return s;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("polynomial arithmetic and exact division") {
  Poly p = parse_poly("(1+z1)*(1-4*z1-4*z2)", kz12);
  auto q = p.divide_exact(parse_poly("1-4*z1-4*z2", kz12));
  REQUIRE(q);
  CHECK(*q == parse_poly("1+z1", kz12));
  CHECK_FALSE(p.divide_exact(parse_poly("1+z2", kz12)));
  CHECK(parse_poly("1-4*z1-4*z2", kz12).str(kz12) == "1-4*z1-4*z2");
  CHECK(parse_poly("z^3", kz).theta(0) == parse_poly("3*z^3", kz));
}

TEST_CASE("rational function printing and normalization") {
  RationalFunction y = rf("-1/(3*(1+27*z))");
  CHECK(y.str(kz) == "-1/(3*(1+27*z))");
  CHECK(rf("(2+54*z)/(6+162*z)*z").str(kz) == "1/3*z");
  CHECK(rf("1/(1+27*z)") * rf("1+27*z") == RationalFunction(1, 1));
  CHECK(rf("z/(z^2*(1+z))").den() == parse_poly("z+z^2", kz));
  CHECK(parse_ratfun(y.str(kz), kz) == y);
  Rational l;
  CHECK(rf("8/(1-z)").proportional(rf("1/(1-z)"), &l));
  CHECK(l == 8);
  CHECK_FALSE(rf("z/(1-z)").proportional(rf("1/(1-z)"), &l));
  CHECK_THROWS_AS(rf("1/(z-z)"), Error);
}

TEST_CASE("series_mul examples") {
  MultiSeries a = MultiSeries::from_poly(parse_poly("1+z", kz), 2);
  MultiSeries b = MultiSeries::from_poly(parse_poly("1-z", kz), 2);
  CHECK((a * b).to_poly() == parse_poly("1-z^2", kz));

  LogSeries l = LogSeries::log_var(1, 4, 0);
  LogSeries l2 = series_mul(l, l);
  CHECK(l2.component(Mono{2}) == MultiSeries(1, 4, 1));
  CHECK(l2.components().size() == 1);

  LogSeries t = l + LogSeries(three_h(4));
  CHECK(series_mul(t, LogSeries(MultiSeries(1, 4, 1))) == t);
  CHECK_THROWS_AS(series_mul(l2, l), Error);
}

TEST_CASE("theta_apply examples") {
  LogSeries l = LogSeries::log_var(1, 5, 0);
  CHECK(theta_apply(0, l) == LogSeries(MultiSeries(1, 5, 1)));
  LogSeries zn(MultiSeries::from_poly(parse_poly("z^4", kz), 5));
  CHECK(theta_apply(0, zn).pure().to_poly() == parse_poly("4*z^4", kz));
  LogSeries zl = LogSeries(MultiSeries::variable(1, 5, 0)) * l;
  LogSeries got = theta_apply(0, zl);
  CHECK(got == zl + LogSeries(MultiSeries::variable(1, 5, 0)));
}

TEST_CASE("theta operators commute on two-variable log series") {
  int N = 6;
  LogSeries s(2, N);
  s.add(Mono{0, 0}, MultiSeries::from_poly(parse_poly("1+3*z1-2*z1*z2+z2^3", kz12), N));
  s.add(Mono{1, 0}, MultiSeries::from_poly(parse_poly("z2-7*z1^2*z2", kz12), N));
  s.add(Mono{1, 1}, MultiSeries::from_poly(parse_poly("5+z1*z2^2", kz12), N));
  s.add(Mono{0, 2}, MultiSeries::from_poly(parse_poly("z1-z2", kz12), N));
  CHECK(theta_apply(0, theta_apply(1, s)) == theta_apply(1, theta_apply(0, s)));
}

TEST_CASE("ring axioms on sampled log series") {
  int N = 5;
  LogSeries a(2, N), b(2, N), c(2, N);
  a.add(Mono{0, 0}, MultiSeries::from_poly(parse_poly("2-z1+z1*z2", kz12), N));
  a.add(Mono{1, 0}, MultiSeries::from_poly(parse_poly("1+z2", kz12), N));
  b.add(Mono{0, 0}, MultiSeries::from_poly(parse_poly("1/2+z1^2", kz12), N));
  b.add(Mono{0, 1}, MultiSeries::from_poly(parse_poly("z1", kz12), N));
  c.add(Mono{0, 0}, MultiSeries::from_poly(parse_poly("3-z2^2+z1^3", kz12), N));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
}

TEST_CASE("series inverse, exp, log, compose") {
  int N = 8;
  MultiSeries g = MultiSeries::from_poly(parse_poly("1+4*z", kz), N).inverse();
  CHECK(g.coeff(Mono{3}) == -64);
  MultiSeries x = MultiSeries::from_poly(parse_poly("z1+2*z2-z1*z2", kz12), N);
  CHECK(x.exp().log() == x);
  MultiSeries one = MultiSeries(2, N, 1);
  CHECK((one + x).inverse() * (one + x) == one);
  MultiSeries f = MultiSeries::from_poly(parse_poly("z+z^2", kz), N);
  MultiSeries sub = MultiSeries::from_poly(parse_poly("2*z", kz), N);
  CHECK(f.compose({sub}).to_poly() == parse_poly("2*z+4*z^2", kz));
}

TEST_CASE("rational_reconstruct") {
  int N = 12;
  RationalFunction r = rational_reconstruct(MultiSeries::from_ratfun(rf("1/(1+27*z)"), N), parse_poly("1+27*z", kz));
  CHECK(r == rf("1/(1+27*z)"));
  MultiSeries geo(1, N);
  for (int n = 0; n <= N; ++n) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, n);
    geo.set(Mono{n}, n % 2 ? Rational(-p) : Rational(p));
  }
  CHECK(rational_reconstruct(geo, parse_poly("1+4*z", kz)).num() == Poly(1, 1));
  CHECK_THROWS_AS(rational_reconstruct(geo, parse_poly("1+3*z", kz)), Error);

  RationalFunction d = rf("(1-4*z1-4*z2)/((1-4*z1-4*z2)^2-64*z1*z2)", kz12);
  RationalFunction back = rational_reconstruct(MultiSeries::from_ratfun(d, N), d.den());
  CHECK(back == d);
}

TEST_CASE("exact linear algebra") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    CHECK(s == 0);
  }
  auto x = solve({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK_FALSE(solve({{1, 1}, {1, 1}}, {1, 2}));
}
