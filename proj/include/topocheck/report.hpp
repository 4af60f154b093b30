#pragma once

#include <span>
#include <string>

namespace topocheck {

/// One named verification check. `detail` holds the first counterexample on
/// failure, or a recorded value on success.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  /// `CHECK <name> PASS|FAIL[ <detail>]`
  std::string to_string() const;
};

bool all_passed(std::span<const CheckResult> results);

}  // namespace topocheck
