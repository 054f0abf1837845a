#pragma once

// The acceptance criteria, runnable from the test suite and from the CLI.

#include <cstdint>
#include <string>
#include <vector>

namespace nlgraph::checks {

struct AcceptanceOptions {
  std::string fixtures_dir;
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when the criterion has no time limit
};

inline constexpr int kCriterionCount = 11;

/// Runs criterion `id` (1-based). A thrown exception counts as a failure.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS  C3  <title>: <detail>" with an optional timing suffix.
std::string format_result(const CriterionResult& r, bool with_timing);

}  // namespace nlgraph::checks
