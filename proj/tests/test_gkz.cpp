#include "doctest.h"
#include "lmsb/gkz.hpp"

using namespace lmsb;

namespace {

Rational fact(int n) {
  Integer f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return Rational(f);
}

ThetaOperator op(const char* s, int k) {
  Names n = k == 1 ? Names{"z", "th"} : Names{"z1", "z2", "th1", "th2"};
  return ThetaOperator::from_poly(parse_poly(s, n), k);
}

}  // namespace

TEST_CASE("reduce_to_pf reproduces the model operators") {
  auto p2 = reduce_to_pf(load_model("p2"));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == op("th^3+3*z*th*(3*th+1)*(3*th+2)", 1));

  auto f0 = reduce_to_pf(load_model("f0"));
  CHECK(f0[0] == op("th1^2-z1*(-2*th1-2*th2)*(-2*th1-2*th2-1)", 2));
  CHECK(f0[1] == op("th2^2-z2*(-2*th1-2*th2)*(-2*th1-2*th2-1)", 2));

  auto f1 = reduce_to_pf(load_model("f1"));
  CHECK(f1[0] == op("th1*(th1-th2)-z1*(-2*th1-th2)*(-2*th1-th2-1)", 2));
  CHECK(f1[1] == op("th2^2-z2*(-2*th1-th2)*(th1-th2)", 2));

  auto f2 = reduce_to_pf(load_model("f2"));
  CHECK(f2[0] == op("th1*(th1-2*th2)-z1*(-2*th1)*(-2*th1-1)", 2));
  CHECK(f2[1] == op("th2^2-z2*(th1-2*th2)*(th1-2*th2-1)", 2));
}

TEST_CASE("theta0 per model") {
  CHECK(theta0(load_model("p2")) == op("-3*th", 1));
  CHECK(theta0(load_model("f1")) == op("-2*th1-th2", 2));
  CHECK(theta0(load_model("f2")) == op("-2*th1", 2));
}

TEST_CASE("euler and box operators") {
  auto e = euler_operators(load_model("f1").points);
  REQUIRE(e.size() == 3);
  CHECK(e[0].coeffs == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(e[1].coeffs == std::vector<int>{0, 1, 0, -1, -1});
  CHECK(e[2].coeffs == std::vector<int>{0, 0, 1, 0, -1});
  CHECK(box_operator({-1, 0, 1, -1, 1}).str() == "d_a2d_a4 - d_a0d_a3");
}

TEST_CASE("operator composition") {
  ThetaOperator th = ThetaOperator::theta(1, 0);
  ThetaOperator z = ThetaOperator::scalar(parse_ratfun("z", {"z"}));
  // theta z = z theta + z
  CHECK(th * z == op("z*th+z", 1));
}

TEST_CASE("p2 solutions") {
  FrobeniusBasis fb = frobenius_basis(load_model("p2"), 6);
  CHECK(fb.omega0 == LogSeries(MultiSeries(1, 6, 1)));
  const MultiSeries& h = fb.mirror[0];
  CHECK(h.coeff(Mono{1}) == -6);
  CHECK(h.coeff(Mono{2}) == 45);
  CHECK(h.coeff(Mono{3}) == -560);
  // 3H(z) = 3 sum (3n-1)!/(n!)^3 (-z)^n
  for (int n = 1; n <= 6; ++n)
    CHECK(h.coeff(Mono{n}) == 3 * fact(3 * n - 1) / (fact(n) * fact(n) * fact(n)) * (n % 2 ? -1 : 1));
  CHECK(fb.scale == 2);
  CHECK(fb.double_log.component(Mono{2}) == MultiSeries(1, 6, 1));
}

TEST_CASE("two-parameter solutions match the closed-form H and G") {
  int N = 7;
  auto each = [&](auto&& f) {
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b)
        if (a + b > 0) f(a, b);
  };
  SUBCASE("f0") {
    FrobeniusBasis fb = frobenius_basis(load_model("f0"), N);
    each([&](int a, int b) {
      Rational h = fact(2 * a + 2 * b - 1) / (fact(a) * fact(a) * fact(b) * fact(b));
      CHECK(fb.mirror[0].coeff(Mono{a, b}) == 2 * h);
      CHECK(fb.mirror[1].coeff(Mono{a, b}) == 2 * h);
    });
  }
  SUBCASE("f1") {
    FrobeniusBasis fb = frobenius_basis(load_model("f1"), N);
    each([&](int a, int b) {
      Rational h = a >= b ? Rational(fact(2 * a + b - 1) / (fact(a) * fact(a - b) * fact(b) * fact(b)) * (b % 2 ? -1 : 1)) : Rational(0);
      CHECK(fb.mirror[0].coeff(Mono{a, b}) == 2 * h);
      CHECK(fb.mirror[1].coeff(Mono{a, b}) == h);
    });
  }
  SUBCASE("f2") {
    FrobeniusBasis fb = frobenius_basis(load_model("f2"), N);
    each([&](int a, int b) {
      Rational h = a >= 2 * b && a > 0 ? Rational(2 * fact(2 * a - 1) / (fact(a) * fact(a - 2 * b) * fact(b) * fact(b))) : Rational(0);
      Rational g = a == 0 ? Rational(fact(2 * b - 1) / (fact(b) * fact(b))) : Rational(0);
      CHECK(fb.mirror[0].coeff(Mono{a, b}) == h - g);
      CHECK(fb.mirror[1].coeff(Mono{a, b}) == 2 * g);
    });
  }
}

TEST_CASE("every PF operator annihilates the solution basis") {
  for (auto name : {"p2", "f0", "f1", "f2"}) {
    const ModelData& m = load_model(name);
    FrobeniusBasis fb = frobenius_basis(m, 8);
    for (auto& L : reduce_to_pf(m)) {
      CHECK(verify_annihilation(L, fb.omega0).is_zero());
      for (auto& t : fb.t) CHECK(verify_annihilation(L, t).is_zero());
      CHECK(verify_annihilation(L, fb.double_log).is_zero());
    }
  }
}
