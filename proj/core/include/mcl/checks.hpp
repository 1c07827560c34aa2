#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcl/lattice.hpp"

namespace mcl {

/// Shared configuration for the verification suites.
struct CheckConfig {
  int modulus = 5;
  int indices = 1;
  double tolerance = 1e-9;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  /// Pass iff every non-skipped check passed.
  bool passed() const;
};

/// Runs one named suite: lattice, delta, implication, groups, representation,
/// generation, or all. Deterministic given config (seed included).
VerificationReport run_suite(const std::string& suite, const CheckConfig& config);

const char* to_string(CheckStatus s);

}  // namespace mcl
