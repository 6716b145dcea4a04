// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmsb/yukawa.hpp"

namespace lmsb {

// Holomorphic-limit data. A = theta_0 G / G with G the model's stated limit.
struct SpecialGeometry {
  int k = 0, order = 0;
  std::vector<int> l0;
  MultiSeries Glimit, A;
  RationalFunction kappa, Y00, dlogY;  // dlogY = theta_0 Y00 / Y00

  RationalFunction theta0(const RationalFunction& f) const;
};

SpecialGeometry special_geometry(const ModelData& m, int order);
// theta_0 A + A^2 - dlogY A - kappa; zero when the limit is consistent.
MultiSeries special_geometry_residual(const SpecialGeometry& sg);
// (theta_0^2 - dlogY theta_0 - kappa) applied to theta_0 of each period
// t_1..t_k, d_S F; all must vanish.
std::vector<LogSeries> period_residuals(const ModelData& m, int order);

// sum_j c_j A^j with c_j in Q(z).
class AmplitudePoly {
 public:
  AmplitudePoly() = default;
  AmplitudePoly(int g, int n, int nvars);

  int g() const { return g_; }
  int n() const { return n_; }
  int nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  RationalFunction coeff(int j) const;
  void set(int j, const RationalFunction& c);
  void check_degree() const;  // degree <= 3g - 3 + n

  AmplitudePoly& operator+=(const AmplitudePoly& o);
  AmplitudePoly& operator-=(const AmplitudePoly& o);
  friend AmplitudePoly operator+(AmplitudePoly a, const AmplitudePoly& b) { return a += b; }
  friend AmplitudePoly operator-(AmplitudePoly a, const AmplitudePoly& b) { return a -= b; }
  friend AmplitudePoly operator*(const AmplitudePoly& a, const AmplitudePoly& b);
  friend AmplitudePoly operator*(const RationalFunction& f, const AmplitudePoly& a);
  bool operator==(const AmplitudePoly& o) const;

  AmplitudePoly derivative() const;  // d/dA
  AmplitudePoly integral() const;    // zero constant term
  AmplitudePoly with_labels(int g, int n) const;
  MultiSeries evaluate(const MultiSeries& A, int order) const;
  std::string str(const Names& z) const;

 private:
  void trim();
  int g_ = 0, n_ = 0, nvars_ = 0;
  std::vector<RationalFunction> coeffs_;
};

// polynomial in A of degree <= 1 with the given coefficients
AmplitudePoly amplitude(int g, int n, int nvars, std::vector<RationalFunction> c);
// (theta_0 - n A) C^n_g
AmplitudePoly yy_step(const AmplitudePoly& c, const SpecialGeometry& sg);

AmplitudePoly genus1(const ModelData& m, const SpecialGeometry& sg);
// Throws missing_ambiguity when neither f2 nor registry data is available.
AmplitudePoly genus2(const ModelData& m, const SpecialGeometry& sg, const std::optional<RationalFunction>& f2 = {});
AmplitudePoly genus2_rhs(const SpecialGeometry& sg, const AmplitudePoly& c11);  // -(C_2^1 + (C_1^1)^2) / (2 Y00)

// S^00 = -A / Y00 + fs as a polynomial in A (g, n labels unused).
AmplitudePoly propagator(const SpecialGeometry& sg, const RationalFunction& fs);
// Genus-2 vacuum diagrams with the single propagator S^00.
AmplitudePoly feynman_genus2(const SpecialGeometry& sg, const AmplitudePoly& c11, const RationalFunction& fs);

struct GenusInvariants {
  int g = 0;
  std::map<Mono, Rational> raw;  // q-coefficients of the generating function
  std::map<Mono, InstantonEntry> entries;  // gw: raw / (c.beta) at genus 1, raw at genus 2
  bool integral() const;
};
// Genus 1: sum_gamma c_gamma d_gamma F_1 = -C_1^1 / G with G = theta_0 t_gamma / (-c_gamma).
// Genus 2: F_2 = C_0^2. Both in the q-coordinates of the mirror map.
GenusInvariants genus_invariants(const ModelData& m, int g, int max_degree,
                                 const std::optional<RationalFunction>& f2 = {});

}  // namespace lmsb
