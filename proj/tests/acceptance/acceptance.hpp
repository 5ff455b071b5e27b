// Acceptance suite: nine release criteria for the Otto-cycle library, each
// checked end to end with pinned tolerances.  `run_and_report` prints one
// [PASS]/[FAIL] line per criterion and returns whether all of them passed.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace otto::acceptance {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // populated on failure with the first offending value
};

std::vector<CriterionResult> run_all();

bool run_and_report(std::ostream& os);

}  // namespace otto::acceptance
