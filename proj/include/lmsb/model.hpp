// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lmsb/polytope.hpp"
#include "lmsb/ratfun.hpp"

namespace lmsb {

struct HolomorphicLimit {
  enum class Kind { none, theta_t, one_minus_theta0_h };
  Kind kind = Kind::none;
  int theta = 0, t = 0;                          // theta_t: theta_{theta} t_{t}
  std::vector<std::pair<int, Rational>> h;       // H = sum w (t_i - log z_i)
};

// Model data for one reflexive polygon. Built-ins come from data/models/*.json.
struct ModelData {
  std::string name, description;
  LatticePolytope polytope;
  std::vector<IVec> points;  // A(Delta), origin first
  RelationLattice relations;
  int k = 0;                 // number of moduli l(Delta)-3
  Names z, a;                // variable names
  std::vector<Poly> discriminant_a;
  std::optional<Poly> discriminant_z;
  std::optional<Poly> yukawa_denominator;
  std::map<std::pair<int, int>, RationalFunction> yukawa;  // Y_{ij;0}, 1 <= i <= j <= k, c = 1
  std::optional<RationalFunction> kappa, f11, f2;
  HolomorphicLimit holomorphic_limit;
  std::vector<std::vector<int>> intersection;
  std::vector<std::tuple<int, int, Rational>> double_log;  // sum w d_rho_i d_rho_j
  std::optional<std::pair<int, int>> wronskian_divisor;    // theta_i t_j (0-based)
  std::vector<IVec> rf_basis;                              // A' for t0 t^m

  bool has_registry_data() const { return !yukawa.empty(); }
  std::vector<int> l0() const;        // l_0^{(i)}
  std::vector<int> c() const;         // c_i = -l_0^{(i)}
  std::vector<Poly> z_factors() const;  // known irreducible-ish factors in z
  int index_of(const IVec& m) const;
};

std::string data_dir();
std::vector<std::string> model_names();
const ModelData& load_model(const std::string& name);
ModelData parse_model_json(const std::string& text);
// Bare model for a custom reflexive polygon: lexicographic points, HNF relations.
ModelData model_from_polytope(const LatticePolytope& p);
LatticePolytope parse_polytope_json(const std::string& text);

bool is_regular(const ModelData& m, const std::vector<Rational>& a);

}  // namespace lmsb
