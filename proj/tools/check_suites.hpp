#pragma once

// Randomized property suites behind `tn_order check`. Each suite replays
// the structural claims the library is built around on seeded random
// instances and fixed fixtures, and reports machine-readable pass/fail.

#include <cstdint>
#include <string>
#include <vector>

#include "tnorder/solver.hpp"

namespace tnorder::checks {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;  // one line per failure
};

struct CheckConfig {
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  SolverLimits limits;
};

SuiteResult run_theorem1(const CheckConfig& config);
SuiteResult run_theorem2(const CheckConfig& config);
SuiteResult run_theorem3(const CheckConfig& config);
SuiteResult run_theorem4(const CheckConfig& config);
SuiteResult run_theorem8(const CheckConfig& config);
SuiteResult run_corollary3(const CheckConfig& config);

/// Runs the suite with the given name ("theorem1".."theorem4", "theorem8",
/// "corollary3"), or every suite for "all". Throws InstanceError for
/// unknown names.
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const CheckConfig& config);

}  // namespace tnorder::checks
