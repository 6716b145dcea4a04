#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lmsb/cache.hpp"
#include "lmsb/error.hpp"

using namespace lmsb;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* name) {
  fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  return d;
}

std::size_t file_count(const fs::path& d) {
  if (!fs::exists(d)) return 0;
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(d), fs::directory_iterator()));
}

}  // namespace

TEST_CASE("payload examples") {
  CHECK(render(compute({"yukawa", "p2", std::nullopt, 10}), "json") == "{\"(z,z;z)\":\"-1/(3*(1+27*z))\"}\n");
  CHECK(render(compute({"relations", "f0", std::nullopt, 10}), "json") == "[[-2,1,0,1,0],[-2,0,1,0,1]]\n");
  auto sol = compute({"solutions", "p2", std::nullopt, 3});
  CHECK(sol["t"] == "(-6*z+45*z^2-560*z^3) + log(z)*(1) + O(4)");
  auto gw = compute({"gw0", "p2", std::nullopt, 4});
  CHECK(gw["n"]["4"] == "-192");
  CHECK(render(nlohmann::json{{"a", 1}, {"bbb", "x"}}, "text") == "a    1\nbbb  x\n");
  CHECK_THROWS_AS(compute({"nope", "p2", std::nullopt, 4}), Error);
  CHECK_THROWS_AS(compute({"yukawa", "p7", std::nullopt, 4}), Error);
}

TEST_CASE("custom polytope input") {
  Request r{"relations", "", std::string(R"({"vertices": [[1,0],[0,1],[-1,-1]]})"), 4};
  auto j = compute(r);
  REQUIRE(j.size() == 1);
  CHECK(j[0].size() == 4);
}

TEST_CASE("cache round trip") {
  auto dir = fresh_dir("lmsb_cache_test");
  Cache cache(dir);
  Request r{"yukawa", "f1", std::nullopt, 5};
  auto first = compute_cached(r, &cache);
  CHECK(file_count(dir) == 1);
  CHECK(cache.load(cache_key(r)) == first);
  CHECK(compute_cached(r, &cache).dump() == compute(r).dump());
  // a version bump misses
  CHECK_FALSE(cache.load(cache_key(r, "0.0.0")).has_value());
  // corrupt entries fall back to recomputation
  for (auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
  CHECK_FALSE(cache.load(cache_key(r)).has_value());
  CHECK(compute_cached(r, &cache) == first);
  CHECK(cache.load(cache_key(r)) == first);
}

TEST_CASE("no cache writes nothing") {
  auto dir = fresh_dir("lmsb_nocache_test");
  compute_cached({"gw0", "p2", std::nullopt, 3}, nullptr);
  CHECK(file_count(dir) == 0);
}

TEST_CASE("key stability") {
  CHECK(fnv1a("") == 1469598103934665603ull);
  CHECK(cache_key({"gw0", "p2", std::nullopt, 4}) == std::string("model:p2|gw0|4|") + kVersion);
}
