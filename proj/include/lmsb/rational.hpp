// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lmsb {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p"; throws Error on malformed input.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace lmsb
