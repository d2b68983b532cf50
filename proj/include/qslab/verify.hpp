#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qslab::verify {

// One acceptance criterion outcome. id runs C01..C15; detail carries the
// measured numbers backing the verdict.
struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string format_line(const CheckResult& r);

// Suites: all, exponents (C01), barenblatt (C02-C03), pme-core (C04-C10),
// quasi (C11), cns (C12-C14), exact (C15). The seed feeds the randomized
// comparison trials. When out_dir is nonempty a verify_report.txt is written
// there. on_result, when set, streams each result as it lands.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed,
                                   const std::string& out_dir,
                                   const std::function<void(const CheckResult&)>& on_result);

}  // namespace qslab::verify
