#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempered/criteria.hpp"

namespace tempered {

/// Outcome of one invariant, aggregated over its samples.
struct CheckResult {
  std::string suite;
  std::string name;
  int samples = 0;
  int failures = 0;
  std::string detail;  // first failure, or a summary
  bool ok() const { return failures == 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 42;
  int samples = 6;                        // random samples per algebra and invariant
  int automorphisms_per_pair = 1;         // for the Ad-invariance check
  std::string suite;                      // empty = every suite
  std::optional<std::string> fixture;     // PairSpec file that must resolve cleanly
  CriteriaConfig criteria{};
};

const std::vector<std::string>& selftest_suites();

/// Runs the invariant suites; throws InputError for an unknown suite name.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

}  // namespace tempered
