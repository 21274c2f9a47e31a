#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"

namespace corrmetrics {

struct CheckResult {
  std::string name;
  std::uint64_t compared = 0;
  std::uint64_t mismatches = 0;  // includes disagreeing defined flags
  double max_abs_diff = 0.0;
};

struct CrossCheckReport {
  std::uint64_t trials = 0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Compares every closed-form metric with its sequence-level evaluation on
/// one matrix, accumulating into `report`.
void cross_check_matrix(const ConfusionMatrix& cm, CrossCheckReport& report);

/// Random matrices cycling through the seven families, K in [2, 5]
/// (at least 3 for imbalanced_3_2), N in [K, 2000].
CrossCheckReport run_cross_check(std::uint64_t trials, std::uint64_t seed,
                                 double tolerance);

std::string format_report(const CrossCheckReport& report);

}  // namespace corrmetrics
