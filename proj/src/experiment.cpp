#include "corrmetrics/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "corrmetrics/binary.hpp"
#include "corrmetrics/enhanced.hpp"
#include "corrmetrics/multinary.hpp"

namespace corrmetrics {

namespace {

struct MetricInfo {
  Metric metric;
  std::string_view name;
  std::string_view key;
};

constexpr std::array<MetricInfo, 11> kMetricInfo = {{
    {Metric::RK, "R_K", "r_k"},
    {Metric::MPC1, "MPC1", "mpc1"},
    {Metric::MPC2, "MPC2", "mpc2"},
    {Metric::ERK, "ER_K", "er_k"},
    {Metric::EMPC1, "EMPC1", "empc1"},
    {Metric::EMPC2, "EMPC2", "empc2"},
    {Metric::EMCC, "EMCC", "emcc"},
    {Metric::A, "A", "a"},
    {Metric::EMPC1Rho, "EMPC1_rho", "empc1_rho"},
    {Metric::ERKRho, "ER_K_rho", "er_k_rho"},
    {Metric::EMPC2Rho, "EMPC2_rho", "empc2_rho"},
}};

const MetricInfo& info(Metric metric) {
  for (const auto& entry : kMetricInfo) {
    if (entry.metric == metric) {
      return entry;
    }
  }
  throw std::logic_error("unknown metric");
}

}  // namespace

std::string_view metric_name(Metric metric) { return info(metric).name; }

std::optional<Metric> parse_metric(std::string_view name) {
  for (const auto& entry : kMetricInfo) {
    if (entry.name == name || entry.key == name) {
      return entry.metric;
    }
  }
  return std::nullopt;
}

Score evaluate(Metric metric, const ConfusionMatrix& cm, RhoParameter rho) {
  switch (metric) {
    case Metric::RK:
      return r_k(cm);
    case Metric::MPC1:
      return mpc1(cm);
    case Metric::MPC2:
      return mpc2(cm);
    case Metric::ERK:
      return er_k(cm);
    case Metric::EMPC1:
      return empc1(cm);
    case Metric::EMPC2:
      return empc2(cm);
    case Metric::EMCC:
      return emcc(cm);
    case Metric::A:
      return accuracy_rescaled(cm);
    case Metric::EMPC1Rho:
      return empc1_rho(cm, rho);
    case Metric::ERKRho:
      return er_k_rho(cm, rho);
    case Metric::EMPC2Rho:
      return empc2_rho(cm, rho);
  }
  throw std::logic_error("unknown metric");
}

void ExperimentConfig::validate() const {
  if (families.empty()) {
    throw std::invalid_argument("experiment needs at least one family");
  }
  if (metrics.empty()) {
    throw std::invalid_argument("experiment needs at least one metric");
  }
  if (replicates < 1) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  if (histogram_bins < 2) {
    throw std::invalid_argument("histogram needs at least 2 bins");
  }
  if (workers < 1) {
    throw std::invalid_argument("workers must be >= 1");
  }
  for (const auto& spec : families) {
    spec.validate();
  }
}

std::vector<std::vector<Score>> sample_scores(const FamilySpec& spec,
                                              const std::vector<Metric>& metrics,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              RhoParameter rho, std::size_t workers) {
  spec.validate();
  std::vector<std::vector<Score>> out(replicates);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t r = next++; r < replicates; r = next++) {
      const ConfusionMatrix cm = generate(spec, r, master_seed);
      auto& row = out[r];
      row.reserve(metrics.size());
      for (Metric m : metrics) {
        row.push_back(evaluate(m, cm, rho));
      }
    }
  };
  const std::size_t threads =
      std::min<std::uint64_t>(std::max<std::size_t>(workers, 1), replicates);
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t i = 0; i < threads; ++i) {
    pool.emplace_back(work);
  }
  pool.clear();  // joins
  return out;
}

std::vector<double> histogram_edges(std::size_t bins) {
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = -1.0 + static_cast<double>(2 * i) / static_cast<double>(bins);
  }
  return edges;
}

std::size_t bin_index(const std::vector<double>& edges, double value) {
  const std::size_t bins = edges.size() - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), value);
  if (it == edges.begin()) {
    return 0;
  }
  return std::min<std::size_t>(static_cast<std::size_t>(it - edges.begin()) - 1,
                               bins - 1);
}

MetricHistogram build_histogram(Metric metric, Family family,
                                const std::vector<Score>& scores, std::size_t bins) {
  MetricHistogram h;
  h.metric = metric;
  h.family = family;
  h.bin_edges = histogram_edges(bins);
  h.counts.assign(bins, 0);

  std::vector<double> values;
  values.reserve(scores.size());
  for (const Score& s : scores) {
    if (!s.defined) {
      ++h.undefined_count;
      continue;
    }
    values.push_back(s.value);
    ++h.counts[bin_index(h.bin_edges, s.value)];
  }

  if (values.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    h.summary = {nan, nan, nan, nan};
    return h;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  h.summary.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  h.summary.min = values.front();
  h.summary.max = values.back();
  const std::size_t mid = values.size() / 2;
  h.summary.median = values.size() % 2 == 1
                         ? values[mid]
                         : 0.5 * (values[mid - 1] + values[mid]);
  return h;
}

std::vector<MetricHistogram> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<MetricHistogram> out;
  for (const FamilySpec& spec : config.families) {
    const auto scores = sample_scores(spec, config.metrics, config.replicates,
                                      config.master_seed, config.rho, config.workers);
    std::vector<Score> column(scores.size());
    for (std::size_t m = 0; m < config.metrics.size(); ++m) {
      for (std::size_t r = 0; r < scores.size(); ++r) {
        column[r] = scores[r][m];
      }
      out.push_back(build_histogram(config.metrics[m], spec.family, column,
                                    config.histogram_bins));
    }
  }
  return out;
}

std::optional<Score> MetricPanel::find(std::string_view name) const {
  for (const auto& [key, score] : scores) {
    if (key == name) {
      return score;
    }
  }
  return std::nullopt;
}

MetricPanel score_matrix(const ConfusionMatrix& cm, RhoParameter rho,
                         const std::optional<WeightVector>& weights) {
  MetricPanel panel;
  panel.classes = cm.classes();
  panel.total = cm.total();
  panel.rho = rho.value();

  for (Metric m : kAllMetrics) {
    Score s;
    if (weights && m == Metric::MPC1) {
      s = mpc1(cm, *weights);
    } else if (weights && m == Metric::EMPC1) {
      s = empc1(cm, *weights);
    } else if (weights && m == Metric::EMPC1Rho) {
      s = empc1_rho(cm, rho, *weights);
    } else {
      s = evaluate(m, cm, rho);
    }
    panel.scores.emplace_back(std::string(info(m).key), s);
  }
  if (cm.classes() == 2) {
    const BinaryCounts counts = binary_counts(cm);
    panel.scores.emplace_back("mcc", mcc(counts));
    panel.scores.emplace_back("f1", f1(counts));
    panel.scores.emplace_back("accuracy", accuracy(counts));
  }
  if (reduced_length_exceeds_total(cm)) {
    panel.warnings.emplace_back(
        "alpha_k + beta_k >= N for some class; enhanced metrics use a reduced "
        "length that is not shorter than N");
  }
  return panel;
}

MetricPanel score_file(const std::string& path, RhoParameter rho,
                       const std::optional<WeightVector>& weights, bool transpose) {
  ConfusionMatrix cm = read_confusion_matrix(path);
  if (transpose) {
    cm = cm.transposed();
  }
  return score_matrix(cm, rho, weights);
}

}  // namespace corrmetrics
