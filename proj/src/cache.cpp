// SPDX-License-Identifier: Apache-2.0
#include "lmsb/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "lmsb/error.hpp"

namespace lmsb {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string cache_key(const Request& r, const std::string& version) {
  std::string src = r.input ? "input:" + std::to_string(fnv1a(*r.input)) : "model:" + r.model;
  return src + "|" + r.command + "|" + std::to_string(r.order) + "|" + version;
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("LMSB_CACHE_DIR"); d && *d) return d;
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "lmsb";
  return std::filesystem::temp_directory_path() / "lmsb-cache";
}

std::filesystem::path Cache::file(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<nlohmann::json> Cache::load(const std::string& key) const {
  std::ifstream in(file(key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store(const CacheEntry& e) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create cache dir " + dir_.string());
  auto path = file(e.key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::io, "cannot write " + tmp.string());
    out << nlohmann::json{{"key", e.key}, {"payload", e.payload}}.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::io, "cannot write " + path.string());
}

nlohmann::json compute_cached(const Request& r, const Cache* cache) {
  if (!cache || r.command == "models") return compute(r);
  std::string key = cache_key(r);
  if (auto hit = cache->load(key)) return *hit;
  auto payload = compute(r);
  cache->store({key, payload});
  return payload;
}

}  // namespace lmsb
