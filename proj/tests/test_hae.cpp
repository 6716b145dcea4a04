#include "doctest.h"
#include "lmsb/error.hpp"
#include "lmsb/hae.hpp"

using namespace lmsb;

namespace {

RationalFunction rf(const char* s, const ModelData& m) { return parse_ratfun(s, m.z); }

}  // namespace

TEST_CASE("special geometry, P2") {
  auto& m = load_model("p2");
  auto sg = special_geometry(m, 10);
  CHECK(sg.Y00 == rf("9/(1+27*z)", m));
  CHECK(sg.kappa == rf("-54*z/(1+27*z)", m));
  CHECK(sg.A.constant_term() == 0);
  CHECK(sg.Glimit.constant_term() == 1);
  CHECK(special_geometry_residual(sg).is_zero());
  for (auto& r : period_residuals(m, 10)) CHECK(r.is_zero());
}

TEST_CASE("special geometry identities, all models") {
  for (const char* n : {"f0", "f1", "f2"}) {
    CAPTURE(n);
    auto& m = load_model(n);
    CHECK(special_geometry_residual(special_geometry(m, 10)).is_zero());
    for (auto& r : period_residuals(m, 8)) CHECK(r.is_zero());
  }
  auto& f2 = load_model("f2");
  CHECK(*f2.kappa == rf("8*z1*(1-6*z1+24*z1*z2)/((1-4*z1)^2-64*z1^2*z2)", f2));
}

TEST_CASE("yy_step") {
  auto& m = load_model("p2");
  auto sg = special_geometry(m, 6);
  AmplitudePoly zero(0, 3, 1);
  CHECK(yy_step(zero, sg).degree() == -1);
  auto c04 = yy_step(amplitude(0, 3, 1, {sg.Y00}), sg);
  CHECK(c04 == amplitude(0, 4, 1, {sg.theta0(sg.Y00), sg.Y00 * Rational(-3)}));
  auto c11 = genus1(m, sg);
  CHECK(c11.degree() == 1);
  CHECK(*m.f11 == rf("(1+54*z)/(4*(1+27*z))", m));
  auto c12 = yy_step(c11, sg);
  RationalFunction f = *m.f11;
  CHECK(c12 == amplitude(1, 2, 1, {sg.theta0(f) - sg.kappa * Rational(1, 2), -(sg.dlogY * Rational(1, 2)) - f,
                                   RationalFunction(1, 1)}));
}

TEST_CASE("genus 2, P2") {
  auto& m = load_model("p2");
  auto sg = special_geometry(m, 6);
  auto c02 = genus2(m, sg);
  CHECK(c02.degree() == 3);
  CHECK(*m.f2 == rf("(3/40*z+783/80*z^2+3645/8*z^3)/(1+27*z)^2", m));
  CHECK(c02.derivative() == genus2_rhs(sg, genus1(m, sg)));
  RationalFunction f = *m.f11, y = sg.Y00;
  RationalFunction pre = RationalFunction(1, Rational(-1, 2)) / y;
  auto expect = amplitude(2, 0, 1,
                          {*m.f2, pre * (sg.theta0(f) - sg.kappa * Rational(1, 2) + f * f),
                           pre * -(sg.dlogY * Rational(1, 4) + f), pre * Rational(5, 12)});
  CHECK(c02 == expect);

  for (const char* fs : {"0", "z/(1+27*z)"}) {
    CAPTURE(fs);
    auto diff = feynman_genus2(sg, genus1(m, sg), rf(fs, m)) - genus2(m, sg, RationalFunction(1));
    CHECK(diff.degree() <= 0);
  }
  CHECK(propagator(sg, RationalFunction(1)) == amplitude(0, 0, 1, {RationalFunction(1), rf("-(1+27*z)/9", m)}));
}

TEST_CASE("genus 2 needs an ambiguity for F models") {
  for (const char* n : {"f0", "f1", "f2"}) {
    auto& m = load_model(n);
    auto sg = special_geometry(m, 4);
    CHECK_THROWS_AS(genus2(m, sg), Error);
    CHECK(genus2(m, sg, RationalFunction(2)).degree() == 3);
  }
}

TEST_CASE("higher-genus BPS numbers, P2") {
  auto& m = load_model("p2");
  auto g1 = genus_invariants(m, 1, 6);
  auto g2 = genus_invariants(m, 2, 6);
  std::vector<int> n1{0, 0, -10, 231, -4452, 80948}, n2{0, 0, 0, -102, 5430, -194022};
  for (int d = 1; d <= 6; ++d) {
    CHECK(g1.entries.at(Mono{d}).bps == n1[d - 1]);
    CHECK(g2.entries.at(Mono{d}).bps == n2[d - 1]);
  }
  CHECK(g1.integral());
  CHECK(g2.integral());
  CHECK(g2.raw.at(Mono{1}) == Rational(1, 80));
}

TEST_CASE("genus 1 BPS numbers, F models") {
  auto f0 = genus_invariants(load_model("f0"), 1, 5);
  CHECK(f0.integral());
  CHECK(f0.entries.at(Mono{2, 2}).bps == 9);
  CHECK(f0.entries.at(Mono{3, 2}).bps == 68);
  CHECK(f0.entries.at(Mono{1, 1}).bps == 0);
  auto f1 = genus_invariants(load_model("f1"), 1, 5);
  CHECK(f1.integral());
  CHECK(f1.entries.at(Mono{3, 2}).bps == 9);
  auto f2 = genus_invariants(load_model("f2"), 1, 5);
  CHECK(f2.integral());
  CHECK_FALSE(f2.entries.at(Mono{0, 1}).determined);
}
