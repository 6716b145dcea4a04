#include "doctest.h"
#include "lmsb/oracle.hpp"
#include "lmsb/yukawa.hpp"

using namespace lmsb;

TEST_CASE("numeric oracle reproduces the exact local P2 invariants") {
  auto o = oracle_gw0_p2(4);
  REQUIRE(o.bps.size() == 4);
  auto exact = gw0_invariants(load_model("p2"), 4);
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    CAPTURE(o.bps[d - 1]);
    CHECK(agrees_to_digits(exact.entries.at(Mono{d}).bps, o.bps[d - 1], 10));
    CHECK(agrees_to_digits(exact.entries.at(Mono{d}).gw, o.gw[d - 1], 10));
  }
  CHECK(agrees_to_digits(Rational(3), o.bps[0], 20));
}

TEST_CASE("digit comparison") {
  CHECK(agrees_to_digits(Rational(1, 3), "0.3333333333333", 12));
  CHECK_FALSE(agrees_to_digits(Rational(1, 3), "0.3334", 10));
}
