#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cwidth {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct WidthCheckReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  double max_abs_deviation = 0.0;  // max |width(theta) - 2|
  bool pass = false;               // deviation < 1e-9
};

/// Width sweep over random unit directions.
WidthCheckReport width_check(int n, long long samples, std::uint64_t seed);

/// The `verify` checklist: specfun invariants, membership-oracle equivalence,
/// width sweep, the T_{1,1} moment identity, the two-route s agreement, the
/// three-way volume agreement, and bound-chain coherence.
std::vector<CheckResult> run_verification(long long samples, std::uint64_t seed);

}  // namespace cwidth
