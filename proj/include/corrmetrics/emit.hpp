#pragma once

#include <string>
#include <vector>

#include "corrmetrics/experiment.hpp"

namespace corrmetrics {

enum class OutputFormat { Csv, Json };

/// 12 significant digits, the fixed precision of every emitted real.
std::string format_real(double value);
double round_significant(double value);

// All emitters are byte-stable: same inputs, same bytes, regardless of how
// many workers produced the histograms.

/// Header `family,metric,bin_lo,bin_hi,count`, then one row per bin.
std::string histograms_csv(const std::vector<MetricHistogram>& histograms);
/// Keys sorted; nested family -> metric with edges, counts, summary and the
/// undefined count, plus the run configuration.
std::string histograms_json(const std::vector<MetricHistogram>& histograms,
                            const ExperimentConfig& config);
std::string emit(const std::vector<MetricHistogram>& histograms,
                 const ExperimentConfig& config, OutputFormat format);

std::string panel_json(const MetricPanel& panel);
std::string panel_csv(const MetricPanel& panel);
std::string panel_text(const MetricPanel& panel);

/// `path` "-" writes to stdout. Throws std::runtime_error naming the path.
void write_output(const std::string& data, const std::string& path);

}  // namespace corrmetrics
