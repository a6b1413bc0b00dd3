#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hornfix {

struct CriterionResult {
  bool passed = false;
  std::string detail;  // deterministic counts only
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

// The oracle suites 1-9, each with a fixed seed.
const std::vector<Criterion>& selftest_criteria();

std::string format_criterion(const Criterion& c, const CriterionResult& r);

// Runs every suite; one line per suite and a summary line.
struct SelftestOutput {
  std::string text;
  bool passed = false;
};
SelftestOutput run_selftest();

}  // namespace hornfix
