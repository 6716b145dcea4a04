#include "doctest.h"
#include "lmsb/yukawa.hpp"

using namespace lmsb;

TEST_CASE("wronskian route, P2") {
  auto r = yukawa_from_wronskian(load_model("p2"), 10);
  CHECK(r.matches);
  CHECK(r.constant == -2);
  CHECK(r.table.at(1, 1) == parse_ratfun("1/(1+27*z)", {"z"}));
  CHECK(r.table.at(0, 0) == parse_ratfun("9/(1+27*z)", {"z"}));
}

TEST_CASE("wronskian route, F models") {
  for (const char* n : {"f0", "f1", "f2"}) {
    CAPTURE(n);
    auto r = yukawa_from_wronskian(load_model(n), 10);
    CHECK(r.matches);
    CHECK(r.constant == 1);
  }
}

TEST_CASE("ode route") {
  for (const char* n : {"p2", "f0", "f1", "f2"}) {
    CAPTURE(n);
    auto& m = load_model(n);
    auto r = yukawa_from_ode(m);
    CHECK(r.dimension == 1);
    CHECK(r.matches);
    auto closed = yukawa_closed_forms(m);
    for (auto& c : yukawa_constraints(m)) CHECK(constraint_residual(m, c, closed).is_zero());
  }
}

TEST_CASE("a-model couplings") {
  for (const char* n : {"p2", "f0", "f1", "f2"}) {
    CAPTURE(n);
    auto r = amodel_couplings(load_model(n), 6);
    CHECK(r.proportional);
    CHECK(r.ratio == 1);
  }
}

TEST_CASE("genus zero invariants") {
  auto p2 = gw0_invariants(load_model("p2"), 6);
  std::vector<int> expect{3, -6, 27, -192, 1695, -17064};
  for (int d = 1; d <= 6; ++d) CHECK(p2.entries.at(Mono{d}).bps == expect[d - 1]);
  CHECK(p2.integral());
  auto f0 = gw0_invariants(load_model("f0"), 4);
  CHECK(f0.entries.at(Mono{1, 0}).bps == -2);
  CHECK(f0.entries.at(Mono{1, 1}).bps == -4);
  CHECK(f0.entries.at(Mono{2, 2}).bps == -32);
  CHECK(f0.integral());
  auto f1 = gw0_invariants(load_model("f1"), 4);
  CHECK(f1.integral());
  CHECK(f1.entries.at(Mono{1, 0}).bps == -2);
  CHECK(f1.entries.at(Mono{0, 1}).bps == 1);
  CHECK(f1.entries.at(Mono{1, 1}).bps == 3);
  CHECK(f1.entries.at(Mono{2, 1}).bps == 5);
  CHECK(f1.entries.at(Mono{2, 2}).bps == -6);
  auto f2 = gw0_invariants(load_model("f2"), 4);
  CHECK(f2.integral());
  CHECK_FALSE(f2.entries.at(Mono{0, 1}).determined);
  CHECK(f2.entries.at(Mono{1, 0}).bps == -2);
  CHECK(f2.entries.at(Mono{1, 1}).bps == -2);
  CHECK(f2.entries.at(Mono{2, 1}).bps == -4);
  CHECK(f2.entries.at(Mono{3, 1}).bps == -6);
}

TEST_CASE("multicover inversion") {
  std::map<Mono, Rational> a{{Mono{1}, 3}, {Mono{2}, Rational(-45, 8)}};
  auto n = multicover_invert(a, -3);
  CHECK(n.at(Mono{2}) == -6);
}
