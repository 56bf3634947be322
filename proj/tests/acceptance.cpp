// Acceptance gate: runs every verification battery at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exits nonzero if any fail.

#include <cstdio>
#include <exception>

#include "canprod/suites.hpp"

int main() {
  const auto& names = canprod::suite_names();
  int failed = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    canprod::SuiteResult r;
    try {
      r = canprod::run_suite(names[i]);
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %zu: %s (exception: %s)\n", i + 1, names[i].c_str(), e.what());
      ++failed;
      continue;
    }
    std::printf("%s criterion %zu: %s (cases=%zu, failures=%zu, worst residual/tol=%.3g)\n",
                r.pass ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.cases, r.failures,
                r.max_residual);
    for (const auto& line : r.detail) std::printf("    %s\n", line.c_str());
    if (!r.pass) ++failed;
  }
  if (failed) std::printf("acceptance: %d of %zu criteria failed\n", failed, names.size());
  else std::printf("acceptance: all %zu criteria passed\n", names.size());
  return failed == 0 ? 0 : 1;
}
