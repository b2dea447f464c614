#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace parmod {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // sorted by name

  bool overall() const;
  /// Name of the first failing check in report order.
  std::optional<std::string> first_failure() const;
};

enum class VerifyScope { quick, full };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::quick;
  /// Test hook: adds 1 to E_index in the Euler table every check consumes.
  std::optional<std::size_t> inject_euler_fault;
};

/// Largest Euler index the suite reads; fault indices must not exceed it.
inline constexpr std::size_t kVerifyEulerMax = 24;

VerificationReport verify_suite(const VerifyOptions& opts);

}  // namespace parmod
