// Acceptance gate: runs every verification criterion and prints one line per
// result. Exit status 0 means the whole battery passed.
#include <cstdio>

#include "qslab/verify.hpp"

int main() {
  int failures = 0;
  const auto results =
      qslab::verify::run_suite("all", 42, "", [&](const qslab::verify::CheckResult& r) {
        std::printf("%s\n", qslab::verify::format_line(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
      });
  if (failures == 0)
    std::printf("all %zu criteria passed\n", results.size());
  else
    std::printf("%d of %zu criteria failed\n", failures, results.size());
  return failures == 0 ? 0 : 1;
}
