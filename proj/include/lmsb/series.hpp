// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmsb/ratfun.hpp"

namespace lmsb {

// Power series in nvars variables, truncated at total degree `order`.
class MultiSeries {
 public:
  using Terms = std::map<Mono, Rational>;

  MultiSeries() = default;
  MultiSeries(int nvars, int order) : nvars_(nvars), order_(order) {}
  MultiSeries(int nvars, int order, const Rational& c);

  static MultiSeries variable(int nvars, int order, int i);
  static MultiSeries from_poly(const Poly& p, int order);
  static MultiSeries from_ratfun(const RationalFunction& f, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Mono& m) const;
  Rational constant_term() const { return coeff(Mono{}); }
  void set(const Mono& m, const Rational& c);
  void add_term(const Mono& m, const Rational& c);

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  MultiSeries operator-() const;
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
  friend MultiSeries operator*(const Rational& c, MultiSeries a) { return a *= c; }
  bool operator==(const MultiSeries& o) const { return terms_ == o.terms_; }

  MultiSeries theta(int i) const;
  MultiSeries truncated(int n) const;
  MultiSeries inverse() const;
  MultiSeries exp() const;   // constant term must vanish
  MultiSeries log() const;   // constant term must be 1
  MultiSeries pow(int k) const;
  // Substitute subs[i] (series in the target ring, no constant term) for variable i.
  MultiSeries compose(const std::vector<MultiSeries>& subs) const;
  Poly to_poly() const;
  int min_degree() const;

  std::string str(const Names& names) const;

 private:
  int nvars_ = 0, order_ = 0;
  Terms terms_;
};

// Sum over log multi-degrees k of s_k(z) * prod_i (log z_i)^{k_i};
// each k_i <= 2 and |k| <= 2.
class LogSeries {
 public:
  using Components = std::map<Mono, MultiSeries>;

  LogSeries() = default;
  LogSeries(int nvars, int order) : nvars_(nvars), order_(order) {}
  LogSeries(const MultiSeries& s);

  static LogSeries log_var(int nvars, int order, int i);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const Components& components() const { return comps_; }
  MultiSeries component(const Mono& logdeg) const;
  MultiSeries pure() const { return component(Mono{}); }
  bool is_zero() const { return comps_.empty(); }
  bool is_pure() const;
  int log_degree() const;
  void add(const Mono& logdeg, const MultiSeries& s);

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  LogSeries& operator*=(const Rational& c);
  LogSeries operator-() const;
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator*(LogSeries a, const Rational& c) { return a *= c; }
  bool operator==(const LogSeries& o) const { return comps_ == o.comps_; }

  std::string str(const Names& names) const;

 private:
  int nvars_ = 0, order_ = 0;
  Components comps_;
};

inline constexpr int kMaxLogDegree = 2;

LogSeries series_mul(const LogSeries& a, const LogSeries& b);
LogSeries theta_apply(int i, const LogSeries& s);

inline constexpr int kReconstructMargin = 4;

// p/denom with p = truncation of s*denom; throws no_fit if s*denom has
// terms of degree in (order - margin, order].
RationalFunction rational_reconstruct(const MultiSeries& s, const Poly& denom,
                                      int margin = kReconstructMargin);

}  // namespace lmsb
