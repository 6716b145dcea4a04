// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lmsb/rational.hpp"

namespace lmsb {

// Floating-point genus-0 invariants of local P2, computed without the exact
// pipeline: 50-digit evaluation of the hypergeometric mirror map, fixed-point
// inversion z(q), and Cauchy-integral extraction of the q-expansion of the
// Yukawa coupling. Entries are decimal strings, index d-1.
struct OracleGw0 {
  std::vector<std::string> gw;   // N_d
  std::vector<std::string> bps;  // n_d
};
OracleGw0 oracle_gw0_p2(int max_degree, double radius = 0.01, int samples = 64);

// |x - y| <= 10^-digits * max(|x|, |y|)
bool agrees_to_digits(const Rational& x, const std::string& y, int digits);

}  // namespace lmsb
