#pragma once

#include <string>
#include <vector>

namespace postlie {

/// Outcome of one acceptance check; detail carries the scope on success and
/// the first counterexample on failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  double ms = 0;
  std::string detail;
};

/// Runs every acceptance check whose name contains filter (empty runs all).
/// Fixture-driven checks read from fixtures_dir; randomized scopes derive
/// from seed. A missing or unreadable fixture fails its check.
std::vector<CheckResult> run_acceptance(const std::string& fixtures_dir,
                                        const std::string& filter = "",
                                        unsigned seed = 20240601);

}  // namespace postlie
