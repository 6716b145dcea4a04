// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace lmsb {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // first failing check, or a short summary
};

inline constexpr int kCriteria = 10;

// Criteria 1..10; exceptions are reported as failures.
CriterionResult run_criterion(int id, int order = 10);
std::vector<CriterionResult> run_acceptance(int order = 10);

}  // namespace lmsb
