// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace lmsb {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kDefaultOrder = 12;

struct Request {
  std::string command;
  std::string model = "p2";
  std::optional<std::string> input;  // custom polytope JSON text
  int order = kDefaultOrder;
};

// Commands with a payload: models, polytope, relations, pf-ops, solutions,
// mirror-map, yukawa, gw0, genus1, genus2.
bool is_payload_command(const std::string& command);
nlohmann::json compute(const Request& r);

// "json": compact dump; "text": aligned key/value table.
std::string render(const nlohmann::json& payload, const std::string& format);

}  // namespace lmsb
