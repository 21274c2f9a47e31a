#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/generator.hpp"
#include "corrmetrics/score.hpp"

namespace corrmetrics {

enum class Metric {
  RK,
  MPC1,
  MPC2,
  ERK,
  EMPC1,
  EMPC2,
  EMCC,
  A,
  EMPC1Rho,
  ERKRho,
  EMPC2Rho,
};

inline constexpr std::array kAllMetrics = {
    Metric::RK,   Metric::MPC1, Metric::MPC2,     Metric::ERK,
    Metric::EMPC1, Metric::EMPC2, Metric::EMCC,   Metric::A,
    Metric::EMPC1Rho, Metric::ERKRho, Metric::EMPC2Rho,
};

/// Display name used in CSV/JSON output, e.g. "R_K", "EMPC1_rho".
std::string_view metric_name(Metric metric);
std::optional<Metric> parse_metric(std::string_view name);

Score evaluate(Metric metric, const ConfusionMatrix& cm, RhoParameter rho);

struct ExperimentConfig {
  std::vector<FamilySpec> families;
  std::uint64_t replicates = 1000;
  std::vector<Metric> metrics{kAllMetrics.begin(), kAllMetrics.end()};
  RhoParameter rho{};
  std::uint64_t master_seed = 0;
  std::size_t histogram_bins = 40;
  std::size_t workers = 1;

  void validate() const;
};

struct HistogramSummary {
  // NaN when no replicate produced a defined score.
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
};

struct MetricHistogram {
  Metric metric = Metric::RK;
  Family family = Family::Diagonal;
  std::vector<double> bin_edges;     // bins + 1 edges from -1 to 1
  std::vector<std::uint64_t> counts;  // defined scores only
  std::uint64_t undefined_count = 0;
  HistogramSummary summary;
};

/// Scores of every replicate of one family: result[r][m] is metric m of
/// replicate r. Replicates are spread over `workers` threads; the result does
/// not depend on the worker count.
std::vector<std::vector<Score>> sample_scores(const FamilySpec& spec,
                                              const std::vector<Metric>& metrics,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              RhoParameter rho, std::size_t workers);

std::vector<double> histogram_edges(std::size_t bins);
/// Bin of `value` on the given edges. Values on an interior edge go to the upper
/// bin; 1.0 goes to the last bin.
std::size_t bin_index(const std::vector<double>& edges, double value);

MetricHistogram build_histogram(Metric metric, Family family,
                                const std::vector<Score>& scores, std::size_t bins);

/// One histogram per (family, metric), families in config order, metrics in
/// config order within each family.
std::vector<MetricHistogram> run_experiment(const ExperimentConfig& config);

/// All applicable metrics on one matrix. Names are lower-case keys
/// ("r_k", "empc1_rho", ...); K = 2 inputs also get "mcc", "f1" and "accuracy".
struct MetricPanel {
  std::size_t classes = 0;
  Count total = 0;
  double rho = RhoParameter::kDefault;
  std::vector<std::pair<std::string, Score>> scores;
  std::vector<std::string> warnings;

  std::optional<Score> find(std::string_view name) const;
};

MetricPanel score_matrix(const ConfusionMatrix& cm, RhoParameter rho = RhoParameter{},
                         const std::optional<WeightVector>& weights = std::nullopt);

/// Reads the canonical text format. `transpose` swaps rows and columns for
/// files that put predicted classes on the rows.
MetricPanel score_file(const std::string& path, RhoParameter rho = RhoParameter{},
                       const std::optional<WeightVector>& weights = std::nullopt,
                       bool transpose = false);

}  // namespace corrmetrics
