#pragma once
// Registry of oracle-vs-closed-form and invariant checks. Every closed-form
// path has a paired brute-force check here; the CLI `verify` subcommand runs
// the registry and reports one line per check.

#include <cstdint>
#include <string>
#include <vector>

namespace tcs {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 987654321;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace tcs
