// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmsb/model.hpp"
#include "lmsb/series.hpp"

namespace lmsb {

// sum_alpha U_alpha(z) theta^alpha with coefficients on the left.
class ThetaOperator {
 public:
  using Terms = std::map<Mono, RationalFunction>;

  ThetaOperator() = default;
  explicit ThetaOperator(int nvars) : nvars_(nvars) {}
  static ThetaOperator theta(int nvars, int i);
  static ThetaOperator scalar(const RationalFunction& f);
  // p lives in (z_1..z_k, th_1..th_k); z-factors are placed on the left.
  static ThetaOperator from_poly(const Poly& p, int k);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  int order() const;
  void add_term(const Mono& alpha, const RationalFunction& c);
  std::map<Mono, RationalFunction> homogeneous_part(int d) const;

  ThetaOperator& operator+=(const ThetaOperator& o);
  ThetaOperator& operator-=(const ThetaOperator& o);
  friend ThetaOperator operator+(ThetaOperator a, const ThetaOperator& b) { return a += b; }
  friend ThetaOperator operator-(ThetaOperator a, const ThetaOperator& b) { return a -= b; }
  // composition (a after b)
  friend ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b);
  friend ThetaOperator operator*(const RationalFunction& f, const ThetaOperator& a);
  bool operator==(const ThetaOperator& o) const;

  LogSeries apply(const LogSeries& s) const;
  std::string str(const Names& z) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

// Linear operator sum c_m theta_{a_m} (+ constant).
struct EulerOperator {
  std::vector<int> coeffs;
  int constant = 0;
};
std::vector<EulerOperator> euler_operators(const std::vector<IVec>& points);

// prod_{l_m>0} d_{a_m}^{l_m} - prod_{l_m<0} d_{a_m}^{-l_m}
struct BoxOperator {
  std::map<int, int> plus, minus;
  std::string str() const;
};
BoxOperator box_operator(const IVec& l);

// The box operators of the relation basis, rewritten in theta_{z_i}.
std::vector<ThetaOperator> reduce_to_pf(const ModelData& m);
// theta_0 = q_* theta_{a_0} = sum_i l_0^{(i)} theta_i.
ThetaOperator theta0(const ModelData& m);

struct FrobeniusBasis {
  int k = 0, order = 0;
  LogSeries omega0;                  // holomorphic solution
  std::vector<LogSeries> t;          // mirror maps log z_i + ...
  std::vector<MultiSeries> mirror;   // t_i - log z_i
  LogSeries double_log;              // d_S F with the model's rho-combination
  Rational scale;                    // d_S F = scale * (1/2 t.M.t + ...)
};

FrobeniusBasis frobenius_basis(const ModelData& m, int order);
LogSeries verify_annihilation(const ThetaOperator& op, const LogSeries& s);

}  // namespace lmsb
