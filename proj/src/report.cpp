// SPDX-License-Identifier: Apache-2.0
#include "lmsb/report.hpp"

#include <algorithm>
#include <set>

#include "lmsb/error.hpp"
#include "lmsb/hae.hpp"
#include "lmsb/yukawa.hpp"

namespace lmsb {

using nlohmann::json;

namespace {

const std::set<std::string> kPayloadCommands{"models",     "polytope", "relations", "pf-ops", "solutions",
                                             "mirror-map", "yukawa",   "gw0",       "genus1", "genus2"};

json ivecs(const std::vector<IVec>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x);
  return a;
}

std::string degree_key(const Mono& m, int k) {
  std::string s;
  for (int i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

Names q_names(const Names& z) {
  Names q = z;
  for (auto& n : q) std::replace(n.begin(), n.end(), 'z', 'q');
  return q;
}

std::string var_key(const std::string& base, int i, int k) { return k == 1 ? base : base + std::to_string(i + 1); }

json instanton_json(const std::map<Mono, InstantonEntry>& entries, int k) {
  json gw = json::object(), bps = json::object();
  for (auto& [d, e] : entries) {
    gw[degree_key(d, k)] = to_string(e.gw);
    bps[degree_key(d, k)] = e.determined ? json(to_string(e.bps)) : json(nullptr);
  }
  return {{"N", gw}, {"n", bps}};
}

const ModelData& resolve(const Request& r, ModelData& storage) {
  if (!r.input) return load_model(r.model);
  LatticePolytope p = parse_polytope_json(*r.input);
  if (!is_reflexive(p)) throw Error(ErrorKind::invalid_input, "input polytope is not reflexive");
  storage = model_from_polytope(p);
  return storage;
}

json models_payload() {
  json a = json::array();
  for (auto& n : model_names()) {
    auto& m = load_model(n);
    a.push_back({{"name", m.name}, {"description", m.description}, {"points", ivecs(m.points)}, {"moduli", m.k}});
  }
  return a;
}

json polytope_payload(const ModelData& m) {
  auto d = dual_polytope(m.polytope);
  return {{"vertices", ivecs(m.polytope.vertices())},
          {"points", ivecs(m.points)},
          {"reflexive", is_reflexive(m.polytope)},
          {"volume", normalized_volume(m.polytope).get_str()},
          {"dual_vertices", ivecs(d.vertices())},
          {"dual_points", integral_points(d).size()}};
}

json yukawa_payload(const ModelData& m) {
  auto t = yukawa_closed_forms(m);
  json out = json::object();
  if (m.k == 1) {
    // theta_{a_0} = l_0 theta_z in the last slot
    out["(z,z;z)"] = (t.at(1, 1) * (Rational(1) / m.l0()[0])).str(m.z);
    return out;
  }
  for (int i = 1; i <= m.k; ++i)
    for (int j = i; j <= m.k; ++j) out["(" + m.z[i - 1] + "," + m.z[j - 1] + ";a0)"] = t.at(i, j).str(m.z);
  return out;
}

}  // namespace

bool is_payload_command(const std::string& command) { return kPayloadCommands.count(command) > 0; }

json compute(const Request& r) {
  if (!is_payload_command(r.command)) throw Error(ErrorKind::invalid_input, "unknown command " + r.command);
  if (r.order < 1) throw Error(ErrorKind::invalid_input, "order must be positive");
  if (r.command == "models") return models_payload();
  ModelData storage;
  const ModelData& m = resolve(r, storage);
  if (r.command == "polytope") return polytope_payload(m);
  if (r.command == "relations") return ivecs(m.relations.basis);
  if (r.command == "pf-ops") {
    json a = json::array();
    for (auto& op : reduce_to_pf(m)) a.push_back(op.str(m.z));
    return a;
  }
  if (r.command == "solutions") {
    auto fb = frobenius_basis(m, r.order);
    json out{{"omega0", fb.omega0.str(m.z)}};
    for (int i = 0; i < m.k; ++i) out[var_key("t", i, m.k)] = fb.t[i].str(m.z);
    out["dSF"] = fb.double_log.str(m.z);
    return out;
  }
  if (r.command == "mirror-map") {
    auto z = invert_mirror_map(frobenius_basis(m, r.order));
    Names q = q_names(m.z);
    json out = json::object();
    for (int i = 0; i < m.k; ++i) out[var_key("z", i, m.k)] = z[i].to_poly().str(q);
    return out;
  }
  if (r.command == "yukawa") return yukawa_payload(m);
  if (r.command == "gw0") return instanton_json(gw0_invariants(m, r.order).entries, m.k);
  int g = r.command == "genus1" ? 1 : 2;
  auto gi = genus_invariants(m, g, r.order);
  json out = instanton_json(gi.entries, m.k);
  json raw = json::object();
  for (auto& [d, c] : gi.raw) raw[degree_key(d, m.k)] = to_string(c);
  out["raw"] = raw;
  return out;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_string())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string render(const json& payload, const std::string& format) {
  if (format == "json") return payload.dump() + "\n";
  if (format != "text") throw Error(ErrorKind::invalid_input, "unknown format " + format);
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(payload, "", rows);
  std::size_t w = 0;
  for (auto& [k, v] : rows) w = std::max(w, k.size());
  std::string out;
  for (auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace lmsb
