#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace skeletron::checks {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
  double budget_seconds;  // 0 = no time bound
};

/// Runs one acceptance criterion (1..9) with all randomness drawn from
/// `seed`. Exact arithmetic throughout; a criterion fails if any check
/// fails or its time budget is exceeded.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Slope-check fixtures (*.json) in a directory: {"f": ..., "punctures":
/// [...], "expect": "pass"|"fail", optional "claimed_orders": {mark: int}}.
CriterionResult run_fixture_directory(const std::filesystem::path& dir);

inline constexpr int kCriterionCount = 9;

/// Runs every criterion, plus the fixture directory when given, printing
/// one line per criterion. Returns true iff all passed.
bool run_acceptance(std::uint64_t seed, const std::optional<std::filesystem::path>& fixtures, std::ostream& out);

}  // namespace skeletron::checks
