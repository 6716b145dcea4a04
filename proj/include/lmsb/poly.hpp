// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmsb/mono.hpp"
#include "lmsb/rational.hpp"

namespace lmsb {

using Names = std::vector<std::string>;

// Sparse multivariate polynomial over Q with non-negative exponents.
class Poly {
 public:
  using Terms = std::map<Mono, Rational>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rational& c);

  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, const Mono& m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Mono& m) const;
  Rational constant_term() const { return coeff(Mono{}); }
  int total_degree() const;
  int degree(int i) const;
  Mono min_exponents() const;
  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Mono& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;
  Poly derivative(int i) const;
  Poly theta(int i) const;
  Poly mul_mono(const Mono& m) const;
  Poly div_mono(const Mono& m) const;  // m must divide every term
  Rational eval(const std::vector<Rational>& x) const;
  // Substitute vals[i] for variable i; all vals share the target ring.
  Poly substitute(const std::vector<Poly>& vals) const;
  // Reinterpret in a ring with more (or equal) variables, variable i -> map[i].
  Poly embed(int nvars, const std::vector<int>& map) const;
  std::optional<Poly> divide_exact(const Poly& d) const;

  std::string str(const Names& names) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

Names default_names(int nvars, const std::string& stem);

}  // namespace lmsb
