#pragma once

// The workbench acceptance suite: ten numbered checks, each run at fixed
// seeds and fixed tolerances.

#include <string>
#include <vector>

namespace pzbench::selftest {

struct Check {
  std::string what;
  bool pass = false;
  std::string value;  // observed value(s), printed next to the verdict
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  bool pass() const;
};

std::vector<int> criterion_ids();
std::string criterion_name(int id);

/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id);

/// "PASS [3] name (1.2 s): check=value; ..." on one line.
std::string summary_line(const CriterionResult& r);

}  // namespace pzbench::selftest
