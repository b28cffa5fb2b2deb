#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomized (seeded, reproducible) self-checks of the measurement
/// pipeline: Bayes-rule equivalence for one-hot encodings, kernel-form
/// equivalence of the mixed state, fast-vs-reference prediction agreement,
/// the closed-form coherent kernel, and density validity. inject_fault
/// deliberately corrupts one training state so the validity check trips.
std::vector<CheckResult> run_self_checks(std::uint64_t seed,
                                         bool inject_fault = false);

}  // namespace qmc
