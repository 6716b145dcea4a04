// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "lmsb/report.hpp"

namespace lmsb {

struct CacheEntry {
  std::string key;
  nlohmann::json payload;
};

std::uint64_t fnv1a(const std::string& s);
std::string cache_key(const Request& r, const std::string& version = kVersion);
// --cache-dir, else LMSB_CACHE_DIR, else ~/.cache/lmsb
std::filesystem::path default_cache_dir();

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& dir() const { return dir_; }
  // nullopt on miss, corrupt file or key mismatch
  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const CacheEntry& e) const;

 private:
  std::filesystem::path file(const std::string& key) const;
  std::filesystem::path dir_;
};

// Cached compute; cache == nullptr disables reads and writes.
nlohmann::json compute_cached(const Request& r, const Cache* cache);

}  // namespace lmsb
