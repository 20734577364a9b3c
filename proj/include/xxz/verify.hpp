#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xxz/model.hpp"

namespace xxz {

/// One line of a verification report. err is a max-norm residual for the
/// algebra checks and a max relative error for the oracle comparisons.
struct CheckResult {
  std::string name;
  double err = 0.0;
  double tol = 0.0;
  int trials = 0;
  std::string worst_case;  // inputs of the worst trial, for reproduction

  bool pass() const { return err <= tol; }
};

/// Randomized suites comparing every determinant formula against the
/// 2^N oracle, plus the algebraic identities of the integrable structure.
/// Trials are seeded per-index, so runs are deterministic and individual
/// failures reproducible. n must be <= 6 (oracle scale).
std::vector<CheckResult> run_algebra_suite(int n, int trials, std::uint64_t seed);
std::vector<CheckResult> run_scalar_suite(int n, int trials, std::uint64_t seed);
std::vector<CheckResult> run_ff_suite(int n, int trials, std::uint64_t seed);
std::vector<CheckResult> run_cf_suite(int n, int trials, std::uint64_t seed);

/// suite is one of "all", "algebra", "scalar", "ff", "cf".
std::vector<CheckResult> run_suite(const std::string& suite, int n, int trials,
                                   std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace xxz
