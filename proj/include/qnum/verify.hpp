#pragma once

#include <string>
#include <vector>

namespace qnum {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The reproduction suite: every displayed computation re-run against frozen
/// expected values, with runtime budgets enforced. Deterministic and offline.
std::vector<CheckResult> run_paper_suite();

bool all_pass(const std::vector<CheckResult>& results);

/// One line per check: "PASS <name> (1.23s)" or "FAIL <name> (1.23s): detail".
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace qnum
