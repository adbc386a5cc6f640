// The end-to-end verification suite shared by the acceptance test and the
// `verify-all` command.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace vinozeta::acceptance {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  int jobs = 1;
};

CheckResult small_lambda_table(const Options& opts);
CheckResult complete_system_bands(const Options& opts);
CheckResult interval_search(const Options& opts);
CheckResult large_lambda_grid(const Options& opts);
CheckResult zeta_constants(const Options& opts);
CheckResult coefficient_envelope(const Options& opts);
CheckResult oracle_suite(const Options& opts);
CheckResult number_theory_suite(const Options& opts);
CheckResult cross_module_consistency(const Options& opts);

struct Criterion {
  std::string id;
  std::function<CheckResult(const Options&)> run;
};

/// All criteria in a fixed order.
const std::vector<Criterion>& criteria();

/// Runs one criterion, turning an escaped exception into a failed result.
CheckResult run_guarded(const Criterion& c, const Options& opts);

}  // namespace vinozeta::acceptance
