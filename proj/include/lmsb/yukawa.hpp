// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lmsb/gkz.hpp"

namespace lmsb {

using Pair = std::pair<int, int>;

// Y_{ij;0} for 0 <= i <= j <= k; index 0 is the theta_0 direction, i >= 1
// is theta_{z_i}.
struct YukawaTable {
  int k = 0;
  std::map<Pair, RationalFunction> y;
  Rational constant = 1;

  const RationalFunction& at(int i, int j) const { return y.at(i <= j ? Pair{i, j} : Pair{j, i}); }
  // Fills the index-0 entries by linearity in the second slot.
  void complete(const std::vector<int>& l0);
};

YukawaTable yukawa_closed_forms(const ModelData& m);

// det [theta_idx s, theta_1 s, .., theta_k s] over s in (t_1..t_k, d_S F).
// idx holds 0-based theta indices.
LogSeries wronskian(const FrobeniusBasis& fb, const std::vector<int>& idx);

struct WronskianYukawa {
  std::map<Pair, MultiSeries> series;   // (modified) Wronskians Wr_ij, 1-based pairs
  YukawaTable table;                    // reconstructed, rescaled to the closed forms
  Rational constant;                    // Wr_ij = constant * Y_ij
  bool matches = false;
};
WronskianYukawa yukawa_from_wronskian(const ModelData& m, int order);

// One linear constraint sum_a Q_a Y_{a0;0} + sum_a U_a Y_a = 0 obtained from an
// operator in D; a runs over theta-multi-indices of degree 2.
struct YukawaConstraint {
  std::map<Mono, RationalFunction> cubic;  // Q: cubic symbol divided by theta_0
  std::map<Mono, RationalFunction> quad;   // U
};
std::vector<YukawaConstraint> yukawa_constraints(const ModelData& m);
RationalFunction constraint_residual(const ModelData& m, const YukawaConstraint& c, const YukawaTable& t);

struct OdeYukawa {
  int dimension = 0;       // solution-space dimension of the ansatz
  int degree_bound = 0;
  YukawaTable table;       // the solution, scaled to match the closed forms
  Rational constant;       // solution = constant * closed form
  bool matches = false;
};
OdeYukawa yukawa_from_ode(const ModelData& m);

// z_i(q) from q_i = z_i exp(t_i - log z_i).
std::vector<MultiSeries> invert_mirror_map(const FrobeniusBasis& fb);
// d_S F / scale - 1/2 t.M.t as a pure series in z.
MultiSeries instanton_part(const ModelData& m, const FrobeniusBasis& fb);

struct AModelCouplings {
  std::map<Pair, MultiSeries> a_model;  // d_a d_b (d_S F / scale) in q, 1-based pairs
  std::map<Pair, MultiSeries> b_model;  // Yuk(d_a, d_b; theta_0) / G in q
  Rational ratio;                       // b_model = ratio * a_model
  bool proportional = false;
};
AModelCouplings amodel_couplings(const ModelData& m, int order);

struct InstantonEntry {
  Rational gw;    // N_beta
  Rational bps;   // n_beta
  bool determined = true;
};
struct InstantonSeries {
  int k = 0;
  std::map<Mono, InstantonEntry> entries;
  bool integral() const;
};
InstantonSeries gw0_invariants(const ModelData& m, int max_degree);

// Given a_beta = sum_{d | beta} d^w n_{beta/d}, recover n.
std::map<Mono, Rational> multicover_invert(const std::map<Mono, Rational>& a, int w);

}  // namespace lmsb
