#include <chrono>
#include <cstdio>

#include "lmsb/acceptance.hpp"

int main() {
  bool all = true;
  for (int i = 1; i <= lmsb::kCriteria; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = lmsb::run_criterion(i);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%s, %.2fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str(), s);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
