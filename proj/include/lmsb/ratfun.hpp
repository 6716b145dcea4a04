// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmsb/poly.hpp"

namespace lmsb {

// num/den with den != 0. Normal form: the lowest monomial of den has
// coefficient 1 and num, den share no monomial content. No general gcd;
// cancel() strips caller-supplied factors.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int nvars) : num_(nvars), den_(nvars, 1) {}
  RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);
  RationalFunction(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, 1) {}

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c);
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a * c; }
  // Equality as elements of Q(z), by cross multiplication.
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction pow(int k) const;
  RationalFunction derivative(int i) const;
  RationalFunction theta(int i) const;
  Rational eval(const std::vector<Rational>& x) const;
  RationalFunction substitute(const std::vector<RationalFunction>& vals) const;
  RationalFunction cancel(const std::vector<Poly>& factors) const;
  // Some rational multiple: returns lambda with *this == lambda * o, if any.
  bool proportional(const RationalFunction& o, Rational* lambda) const;

  std::string str(const Names& names) const;

 private:
  void normalize();
  Poly num_, den_;
};

// Recursive-descent parser for + - * / ^ ( ) with integer literals.
RationalFunction parse_ratfun(std::string_view s, const Names& names);
Poly parse_poly(std::string_view s, const Names& names);

}  // namespace lmsb
