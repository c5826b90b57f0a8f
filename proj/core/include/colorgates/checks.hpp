#pragma once

// The built-in self-check suites run by `check all`.

#include <cstdint>
#include <string>
#include <vector>

#include "colorgates/code.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {

enum class SuiteStatus : std::uint8_t { kPass, kFail, kSkip };
std::string to_string(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::kSkip;
  std::string detail;
  double seconds = 0;
};

// Colex validity, axioms, logical T, tolerability, Gauss's law and Clifford
// propagation. Suites that need a single logical qubit or a statevector are
// skipped on codes that do not fit. Random cases come from `seed`.
std::vector<SuiteResult> run_check_suites(const CssCode& code, const TPattern& pattern, std::uint64_t seed = 1);

bool all_passed(const std::vector<SuiteResult>& results);

// Fixed-width table, one row per suite.
std::string format_suite_table(const std::vector<SuiteResult>& results);

}  // namespace colorgates
