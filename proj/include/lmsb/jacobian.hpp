// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <map>
#include <random>
#include <vector>

#include "lmsb/hae.hpp"
#include "lmsb/linalg.hpp"

namespace lmsb {

// t_0^k t^m with m in k*Delta.
struct GradedMonomial {
  int k = 0;
  std::array<int, 2> m{};
  auto operator<=>(const GradedMonomial&) const = default;
};

// Graded pieces S^0..S^K of S_Delta.
class GradedRing {
 public:
  GradedRing(const ModelData& model, int K);
  int max_degree() const { return K_; }
  const std::vector<GradedMonomial>& piece(int k) const { return pieces_.at(k); }
  const std::vector<GradedMonomial>& all() const { return all_; }
  int index(const GradedMonomial& g) const;  // -1 when absent
  bool contains(const GradedMonomial& g) const { return index(g) >= 0; }
  // membership of a monomial in I^{(j)}, 0 <= j <= 4
  bool in_ideal(const GradedMonomial& g, int j) const;

 private:
  const ModelData* model_;
  int K_;
  std::vector<std::vector<GradedMonomial>> pieces_;
  std::vector<GradedMonomial> all_;
  std::map<GradedMonomial, int> index_;
};

// Elements of S_Delta[a] with polynomial coefficients in the a_m.
using RingElement = std::map<GradedMonomial, Poly>;

// D_0, D_1, D_2 (i = 0..2) and D_{a_m} acting on S_Delta[a].
RingElement d_operator(const ModelData& m, int i, const RingElement& x);
RingElement d_parameter(const ModelData& m, int point, const RingElement& x);
RingElement monomial_element(const ModelData& m, const GradedMonomial& g);

// Quotient of S^{<=K} by D_i S^{<=K-1} at a numeric parameter point. The
// basis is 1, t_0 t^m (m in A'), t_0, t_0^2.
class Reducer {
 public:
  Reducer(const ModelData& m, const std::vector<Rational>& a, int K = 4);
  const std::vector<GradedMonomial>& basis() const { return basis_; }
  std::vector<Rational> reduce(const std::map<GradedMonomial, Rational>& v) const;
  std::vector<Rational> reduce(const GradedMonomial& g) const;

 private:
  GradedRing ring_;
  std::vector<GradedMonomial> basis_;
  std::vector<int> basis_col_;
  Echelon ech_;
};

std::vector<IVec> rf_basis_points(const ModelData& m);  // A'

// dim R_F^k for k = 0..3; throws not_regular at non-regular points.
std::vector<int> rf_dimensions(const ModelData& m, const std::vector<Rational>& a);
// Vertex coefficients nonzero, edge polynomials squarefree and the
// Jacobian ring of the expected size. Used when no discriminant is known.
bool regular_heuristic(const ModelData& m, const std::vector<Rational>& a);
bool regular_point(const ModelData& m, const std::vector<Rational>& a);
std::vector<Rational> random_regular_point(const ModelData& m, std::mt19937_64& rng);

struct FiltrationTables {
  std::vector<int> I;       // dim I_0 .. I_4
  std::vector<int> E;       // dim E^0, E^{-1}, E^{-2}
  std::vector<int> weight;  // Gr^W_3 .. Gr^W_6 of H^3(Z°)
  std::vector<int> hodge_z; // F^3, F^2, F^1, F^0 of H^3(Z°)
  std::vector<int> relative_weight;  // Gr^W_1 .. Gr^W_4 of H^2(T^2, C°)
  std::vector<int> relative_hodge;   // F^2, F^1, F^0 of H^2(T^2, C°)
  std::vector<std::vector<int>> hodge_numbers;  // h^{p,q}(Z), [q][p]
};
FiltrationTables filtration_tables(const ModelData& m, std::uint64_t seed = 1);

// Rational function N/D with total degrees <= max_degree through the samples;
// uses #unknowns + 3 samples, the surplus acting as verification.
RationalFunction rational_interpolate(const std::vector<std::pair<std::vector<Rational>, Rational>>& samples,
                                      int nvars, int max_degree);

struct NormalFormData {
  // t_0^2 t^p = alpha_p t_0 + beta_p t_0^2 (+ E^{-1} terms when p is not interior),
  // p in A + A, keyed by p.
  std::map<std::array<int, 2>, RationalFunction> alpha, beta;
  RationalFunction gamma, delta;  // t_0^3 = gamma t_0 + delta t_0^2
  RationalFunction alpha_at(const ModelData& m, int point) const;
  RationalFunction beta_at(const ModelData& m, int point) const;
};
NormalFormData normal_form(const ModelData& m, std::uint64_t seed = 7);
// Compares the lifted forms with direct reduction at fresh parameter points.
bool verify_normal_form(const ModelData& m, const NormalFormData& nf, int npoints, std::uint64_t seed);

// omega_m = 2 alpha_m + delta beta_m + d_{a_0} beta_m
std::vector<RationalFunction> xi_log_derivatives(const ModelData& m, const NormalFormData& nf);
bool xi_closed(const ModelData& m, const std::vector<RationalFunction>& omega);

struct PairingNormalization {
  RationalFunction xi;
  std::vector<std::pair<Poly, int>> factors;  // xi = prod f^e
};
PairingNormalization xi_normalization(const ModelData& m, const NormalFormData& nf);

// <x, y> on I_1 with x = x1 t_0 + x2 t_0^2
RationalFunction pairing_i1(const std::array<RationalFunction, 2>& x, const std::array<RationalFunction, 2>& y,
                            const RationalFunction& xi);

struct AlgebraicYukawa {
  RationalFunction y000;      // Yuk(d_{a_0}, d_{a_0}; d_{a_0}) = xi
  std::map<std::pair<int, int>, RationalFunction> theta_a;  // Yuk(th_{a_m}, th_{a_n}; th_{a_0}) in z
  Rational constant;          // theta_a = constant * (pushforward of Y_{ij;0})
  bool matches = false;
};
AlgebraicYukawa algebraic_yukawa(const ModelData& m, const NormalFormData& nf, const PairingNormalization& xi);

// [D_i, D_{a_m}] = 0 on all monomials of degree <= max_degree.
bool d_operators_commute(const ModelData& m, int max_degree = 3);
// D_{a_m} preserves each I_j and lowers the E-level by exactly one.
bool parameter_action_compatible(const ModelData& m, std::uint64_t seed = 3);

// torus/scaling invariant function of a -> function of z
RationalFunction to_z(const ModelData& m, const RationalFunction& f);

}  // namespace lmsb
