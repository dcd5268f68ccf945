// One line per acceptance criterion; nonzero exit when any fails.
#include <cstdio>

#include "unram/cli/criteria.hpp"

int main() {
  using namespace unram::cli;
  int failed = 0;
  for (const auto& r : run_criteria(Suite::full)) {
    const bool ok = r.passed && !r.skipped;
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  %-62s %8.3fs  [%s]\n", r.id, ok ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, acceptance_criteria().size());
  return failed ? 1 : 0;
}
