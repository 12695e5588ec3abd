#pragma once

#include <string>
#include <vector>

#include "midx/enumerate.hpp"
#include "midx/multi_index.hpp"

namespace midx::selfcheck {

// Named verification checks pinning the library against independently
// derived data: the two reference tables, the worked examples, the
// dimension formulas and the cross-oracles below.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Test-harness fault injection: Grading corrupts the regularity parameter
// used by the first table check so that a verification failure path can be
// exercised deliberately.
enum class Fault { None, Grading };

// Runs every check. max_noises (>= 2) bounds the level-graded checks;
// 6 covers the full suite.
std::vector<CheckResult> run_all(int max_noises = 5, Fault fault = Fault::None);

// Number of integer partitions of n, by the restricted-part recurrence;
// independent of the enumeration module.
long partition_count(int n);

// Bounded nested-loop generator for the negative set, with its own grading
// formulas; valid for delta >= 1/3. Serves as the enumeration oracle.
std::vector<MultiIndex> brute_force_negative(const GradingContext& ctx);

}  // namespace midx::selfcheck
