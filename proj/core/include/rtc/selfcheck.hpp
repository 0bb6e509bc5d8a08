#pragma once

#include <string>
#include <vector>

namespace rtc {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct SelftestOptions {
  bool full = false;
  double rel_tol = 1e-10;
  bool corrupt_theta = false;  // negative-control hook: damages one table entry
};

/// Runs the invariant suites (series agreement, dual-path tables, star relations,
/// the log-derivative identity, submatrix structure; full adds the limit sweep and
/// cross-method convergence). Each suite yields one CheckResult.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rtc
