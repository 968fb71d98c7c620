#pragma once

#include <string>
#include <vector>

#include "stiefel/exact.hpp"
#include "stiefel/weights.hpp"

namespace stiefel {

struct ReferenceDegree {
  int k;
  int n;
  BigInt degree;
};

struct ReferenceOmega {
  int k;
  int n;
  Partition omega;
};

/// Published degrees of St(k,n) for 1 <= k <= n <= 10.
const std::vector<ReferenceDegree>& reference_degrees();

/// Published values of Omega_{k,n} for n <= 10.
const std::vector<ReferenceOmega>& reference_omegas();

enum class VerifyLevel { Fast, Full };

/// Parses "fast" or "full"; throws DomainError otherwise.
VerifyLevel parse_verify_level(const std::string& name);

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  ///< 0 means no limit
};

/// Fast runs the table, worked example, seam and Omega checks (plus the
/// representation dimensions); full runs all nine. A check that exceeds
/// its time limit fails.
std::vector<CheckResult> run_checks(VerifyLevel level);

/// Runs a single check by id (1..9).
CheckResult run_check(int id);

}  // namespace stiefel
