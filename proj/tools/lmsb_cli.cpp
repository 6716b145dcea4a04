// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lmsb/acceptance.hpp"
#include "lmsb/cache.hpp"
#include "lmsb/error.hpp"

namespace {

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

int run_check(int order, const std::string& format) {
  auto results = lmsb::run_acceptance(order);
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  for (auto& r : results) {
    all = all && r.pass;
    j.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    for (auto& r : results)
      std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title
                << (r.pass ? "" : "  (" + r.detail + ")") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lmsb: exact local mirror symmetry for 2D reflexive polygons"};
  app.require_subcommand(1, 1);
  std::string model = "p2", format = "json", cache_dir, input;
  int order = lmsb::kDefaultOrder;
  bool no_cache = false;
  app.add_option("--model", model, "built-in model (p2, f0, f1, f2)");
  app.add_option("--order", order, "series truncation order")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cache_dir, "cache directory (default $LMSB_CACHE_DIR or ~/.cache/lmsb)");
  app.add_flag("--no-cache", no_cache, "neither read nor write the cache");
  app.add_option("--input", input, "custom reflexive polygon JSON")->check(CLI::ExistingFile);
  for (const char* c : {"models", "polytope", "relations", "pf-ops", "solutions", "mirror-map", "yukawa", "gw0",
                        "genus1", "genus2", "check"})
    app.add_subcommand(c)->fallthrough();
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (command == "check") return run_check(app.count("--order") ? order : 10, format);
    lmsb::Request req{command, model, std::nullopt, order};
    if (!input.empty()) {
      std::ifstream in(input);
      std::stringstream ss;
      ss << in.rdbuf();
      req.input = ss.str();
    }
    std::optional<lmsb::Cache> cache;
    if (!no_cache) cache.emplace(cache_dir.empty() ? lmsb::default_cache_dir() : std::filesystem::path(cache_dir));
    auto payload = lmsb::compute_cached(req, cache ? &*cache : nullptr);
    std::cout << lmsb::render(payload, format);
  } catch (const lmsb::Error& e) {
    print_error(lmsb::to_string(e.kind()), e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 2;
  }
  return 0;
}
