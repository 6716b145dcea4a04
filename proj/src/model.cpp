// SPDX-License-Identifier: Apache-2.0
#include "lmsb/model.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "lmsb/error.hpp"

namespace lmsb {

using nlohmann::json;

namespace {

Names a_names(std::size_t l) {
  Names n;
  for (std::size_t i = 0; i < l; ++i) n.push_back("a" + std::to_string(i));
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::io, "cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

}  // namespace

std::vector<int> ModelData::l0() const {
  std::vector<int> r;
  for (auto& l : relations.basis) r.push_back(l[0]);
  return r;
}

std::vector<int> ModelData::c() const {
  std::vector<int> r;
  for (int x : l0()) r.push_back(-x);
  return r;
}

std::vector<Poly> ModelData::z_factors() const {
  std::vector<Poly> f;
  if (discriminant_z) f.push_back(*discriminant_z);
  if (yukawa_denominator) {
    Poly d = *yukawa_denominator;
    if (discriminant_z)
      if (auto q = d.divide_exact(*discriminant_z)) d = *q;
    if (!d.is_constant()) f.push_back(d);
  }
  return f;
}

int ModelData::index_of(const IVec& m) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == m) return static_cast<int>(i);
  return -1;
}

std::string data_dir() {
  if (const char* env = std::getenv("LMSB_DATA_DIR")) return env;
  return LMSB_DATA_DIR;
}

std::vector<std::string> model_names() {
  std::vector<std::string> names;
  std::filesystem::path dir = std::filesystem::path(data_dir()) / "models";
  if (!std::filesystem::exists(dir)) return names;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

ModelData parse_model_json(const std::string& text) {
  json j = json::parse(text);
  ModelData m;
  m.name = j.at("name").get<std::string>();
  m.description = j.value("description", "");
  m.points = j.at("points").get<std::vector<IVec>>();
  m.polytope = LatticePolytope::from_points(m.points);
  m.relations.npoints = static_cast<int>(m.points.size());
  m.relations.basis = j.at("relations").get<std::vector<IVec>>();
  m.k = static_cast<int>(m.relations.basis.size());
  m.z = j.at("z").get<Names>();
  m.a = a_names(m.points.size());
  if (static_cast<int>(m.z.size()) != m.k) throw Error(ErrorKind::invalid_input, m.name + ": z/relations mismatch");
  if (!is_relation_basis(m.points, m.relations.basis))
    throw Error(ErrorKind::invalid_input, m.name + ": relations are not a basis of L(Delta)");
  auto all = integral_points(m.polytope);
  auto sorted = m.points;
  std::sort(sorted.begin(), sorted.end());
  std::sort(all.begin(), all.end());
  if (all != sorted || m.points[0] != IVec(m.points[0].size(), 0))
    throw Error(ErrorKind::invalid_input, m.name + ": points must be A(Delta) with the origin first");
  for (auto& s : j.value("discriminant_a", std::vector<std::string>{})) m.discriminant_a.push_back(parse_poly(s, m.a));
  if (j.contains("discriminant_z")) m.discriminant_z = parse_poly(j["discriminant_z"].get<std::string>(), m.z);
  if (j.contains("yukawa_denominator"))
    m.yukawa_denominator = parse_poly(j["yukawa_denominator"].get<std::string>(), m.z);
  if (j.contains("yukawa"))
    for (auto& [key, val] : j["yukawa"].items()) {
      int a = 0, b = 0;
      if (std::sscanf(key.c_str(), "%d,%d", &a, &b) != 2 || a < 1 || b < a || b > m.k)
        throw Error(ErrorKind::invalid_input, m.name + ": bad yukawa key " + key);
      m.yukawa[{a - 1, b - 1}] = parse_ratfun(val.get<std::string>(), m.z);
    }
  if (j.contains("kappa")) m.kappa = parse_ratfun(j["kappa"].get<std::string>(), m.z);
  if (j.contains("f11")) m.f11 = parse_ratfun(j["f11"].get<std::string>(), m.z);
  if (j.contains("f2")) m.f2 = parse_ratfun(j["f2"].get<std::string>(), m.z);
  if (j.contains("holomorphic_limit")) {
    auto& h = j["holomorphic_limit"];
    std::string kind = h.at("kind").get<std::string>();
    if (kind == "theta_t") {
      m.holomorphic_limit.kind = HolomorphicLimit::Kind::theta_t;
      m.holomorphic_limit.theta = h.at("theta").get<int>() - 1;
      m.holomorphic_limit.t = h.at("t").get<int>() - 1;
    } else if (kind == "one_minus_theta0_H") {
      m.holomorphic_limit.kind = HolomorphicLimit::Kind::one_minus_theta0_h;
      for (auto& w : h.at("H")) m.holomorphic_limit.h.emplace_back(w.at(0).get<int>() - 1, json_rational(w.at(1)));
    } else {
      throw Error(ErrorKind::invalid_input, m.name + ": unknown holomorphic limit " + kind);
    }
  }
  m.intersection = j.value("intersection", std::vector<std::vector<int>>{});
  for (auto& d : j.value("double_log", json::array()))
    m.double_log.emplace_back(d.at(0).get<int>() - 1, d.at(1).get<int>() - 1, json_rational(d.at(2)));
  if (j.contains("wronskian_divisor") && !j["wronskian_divisor"].is_null())
    m.wronskian_divisor = std::make_pair(j["wronskian_divisor"][0].get<int>() - 1, j["wronskian_divisor"][1].get<int>() - 1);
  m.rf_basis = j.value("rf_basis", std::vector<IVec>{});
  // consistency: discriminant divides every Yukawa denominator ansatz
  if (m.discriminant_z && m.yukawa_denominator && !m.yukawa_denominator->divide_exact(*m.discriminant_z))
    throw Error(ErrorKind::invalid_input, m.name + ": discriminant does not divide the Yukawa denominator");
  return m;
}

const ModelData& load_model(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, ModelData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  std::filesystem::path p = std::filesystem::path(data_dir()) / "models" / (name + ".json");
  if (!std::filesystem::exists(p)) throw Error(ErrorKind::unknown_model, "unknown model '" + name + "'");
  ModelData m = parse_model_json(slurp(p));
  return cache.emplace(name, std::move(m)).first->second;
}

ModelData model_from_polytope(const LatticePolytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorKind::invalid_input, "polytope is not reflexive");
  ModelData m;
  m.name = "custom";
  m.polytope = p;
  m.points = integral_points(p);
  m.relations = lattice_of_relations(m.points);
  m.k = static_cast<int>(m.relations.basis.size());
  m.z = default_names(m.k, "z");
  m.a = a_names(m.points.size());
  return m;
}

LatticePolytope parse_polytope_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("polytope JSON: ") + e.what());
  }
  auto verts = j.at("vertices").get<std::vector<IVec>>();
  int dim = j.value("dim", verts.empty() ? 0 : static_cast<int>(verts[0].size()));
  for (auto& v : verts)
    if (static_cast<int>(v.size()) != dim) throw Error(ErrorKind::invalid_input, "vertex of wrong dimension");
  return LatticePolytope::from_points(verts);
}

bool is_regular(const ModelData& m, const std::vector<Rational>& a) {
  if (a.size() != m.points.size()) throw Error(ErrorKind::invalid_input, "coefficient vector has wrong length");
  if (m.discriminant_a.empty())
    throw Error(ErrorKind::invalid_input, m.name + ": no discriminant data; use the sampled regularity heuristic");
  for (auto& f : m.discriminant_a)
    if (sgn(f.eval(a)) == 0) return false;
  return true;
}

}  // namespace lmsb
