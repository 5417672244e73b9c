#include <cstdio>

#include "conicval/suites.hpp"

int main() {
  using namespace conicval;
  int failed = 0;
  int index = 0;
  for (const auto& name : suite_names()) {
    ++index;
    const SuiteResult r = run_suite(name);
    std::printf("%s %2d %-18s %8ld checks %8.2f s  %s\n", r.passed ? "PASS" : "FAIL", index, r.name.c_str(), r.checks,
                r.seconds, r.description.c_str());
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu acceptance criteria passed\n", index - failed, suite_names().size());
  return failed == 0 ? 0 : 1;
}
