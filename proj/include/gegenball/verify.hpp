#pragma once

// Numerical self-checks, one per acceptance criterion. Each check sweeps the
// parameter grid (or the configurations given in VerifyOptions) and reports
// its worst residual against a fixed tolerance.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gegenball/params.hpp"

namespace gegenball {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Worst observed value; for lower-bound checks this is the margin.
  double residual = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

using NormFormula = std::function<double(const WeightParams&, int n, int j)>;

struct VerifyOptions {
  std::vector<int> dims{2, 3};
  /// Overrides the acceptance grid when non-empty.
  std::vector<WeightParams> configs;
  std::uint64_t seed = 20240611;
  /// Replaces the closed-form H_j^n in the norm check (negative testing).
  NormFormula norm_formula;
  /// Check names to run; empty runs all of them.
  std::vector<std::string> only;
};

namespace verify {

std::vector<WeightParams> configs_for(const VerifyOptions& opts, int d);

CheckResult orthogonality(const VerifyOptions& opts);
CheckResult norms(const VerifyOptions& opts);
CheckResult kernel_equivalence(const VerifyOptions& opts);
CheckResult simplex_agreement(const VerifyOptions& opts);
CheckResult addition_formula(const VerifyOptions& opts);
CheckResult differential_equations(const VerifyOptions& opts);
CheckResult contiguous_relations(const VerifyOptions& opts);
CheckResult convolution_algebra(const VerifyOptions& opts);
CheckResult cesaro_summability(const VerifyOptions& opts);
CheckResult poisson(const VerifyOptions& opts);

/// Names accepted by VerifyOptions::only, in run order.
const std::vector<std::string>& check_names();
CheckResult run_check(const std::string& name, const VerifyOptions& opts);
std::vector<CheckResult> run_all(const VerifyOptions& opts);

/// A norm formula off by 0.1% from degree 2 on.
NormFormula corrupted_norm_formula();

std::string to_json(const std::vector<CheckResult>& results);

}  // namespace verify
}  // namespace gegenball
