// One PASS/FAIL line per acceptance criterion; failing subchecks follow
// indented. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>

#include "captower/verify.hpp"

int main() {
  int failed = 0;
  for (int k = 1; k <= 7; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = cap::run_criterion(k);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int bad = 0;
    for (const auto& c : checks) bad += !c.pass;
    const bool ok = bad == 0 && !checks.empty();
    failed += !ok;
    std::printf("criterion %d: %s (%zu checks, %d failed, %.1f s)\n", k, ok ? "PASS" : "FAIL", checks.size(), bad, s);
    for (const auto& c : checks)
      if (!c.pass) std::printf("    failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : ": ", c.detail.c_str());
  }
  std::printf("%d of 7 criteria passed\n", 7 - failed);
  return failed ? 1 : 0;
}
