#include "corrmetrics/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace corrmetrics {

using nlohmann::json;

std::string format_real(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_significant(double value) {
  if (!std::isfinite(value)) {
    return value;
  }
  return std::strtod(format_real(value).c_str(), nullptr);
}

namespace {

json real(double value) {
  if (std::isnan(value)) {
    return nullptr;
  }
  return round_significant(value);
}

}  // namespace

std::string histograms_csv(const std::vector<MetricHistogram>& histograms) {
  std::string out = "family,metric,bin_lo,bin_hi,count\n";
  for (const auto& h : histograms) {
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      out += std::string(family_name(h.family)) + ',' +
             std::string(metric_name(h.metric)) + ',' + format_real(h.bin_edges[b]) +
             ',' + format_real(h.bin_edges[b + 1]) + ',' +
             std::to_string(h.counts[b]) + '\n';
    }
  }
  return out;
}

std::string histograms_json(const std::vector<MetricHistogram>& histograms,
                            const ExperimentConfig& config) {
  json families = json::object();
  for (const auto& h : histograms) {
    json edges = json::array();
    for (double e : h.bin_edges) {
      edges.push_back(real(e));
    }
    json entry = {
        {"bin_edges", edges},
        {"counts", h.counts},
        {"undefined_count", h.undefined_count},
        {"summary",
         {{"min", real(h.summary.min)},
          {"max", real(h.summary.max)},
          {"mean", real(h.summary.mean)},
          {"median", real(h.summary.median)}}},
    };
    families[std::string(family_name(h.family))][std::string(metric_name(h.metric))] =
        std::move(entry);
  }

  json family_list = json::array();
  for (const auto& spec : config.families) {
    family_list.push_back({{"family", family_name(spec.family)},
                           {"k", spec.k},
                           {"n", spec.n}});
  }
  json metric_list = json::array();
  for (Metric m : config.metrics) {
    metric_list.push_back(metric_name(m));
  }
  json doc = {
      {"config",
       {{"families", family_list},
        {"metrics", metric_list},
        {"replicates", config.replicates},
        {"seed", config.master_seed},
        {"rho", real(config.rho.value())},
        {"histogram_bins", config.histogram_bins},
        {"rng", Xoshiro256::kAlgorithm}}},
      {"families", families},
  };
  return doc.dump(2) + '\n';
}

std::string emit(const std::vector<MetricHistogram>& histograms,
                 const ExperimentConfig& config, OutputFormat format) {
  return format == OutputFormat::Csv ? histograms_csv(histograms)
                                     : histograms_json(histograms, config);
}

std::string panel_json(const MetricPanel& panel) {
  json scores = json::object();
  json undefined = json::array();
  for (const auto& [name, score] : panel.scores) {
    scores[name] = real(score.value);
    if (!score.defined) {
      undefined.push_back(name);
    }
  }
  json doc = {
      {"k", panel.classes},
      {"n", panel.total},
      {"rho", real(panel.rho)},
      {"scores", scores},
      {"undefined", undefined},
      {"warnings", panel.warnings},
  };
  return doc.dump(2) + '\n';
}

std::string panel_csv(const MetricPanel& panel) {
  std::string out = "metric,value,defined\n";
  for (const auto& [name, score] : panel.scores) {
    out += name + ',' + format_real(score.value) + ',' +
           (score.defined ? "true" : "false") + '\n';
  }
  return out;
}

std::string panel_text(const MetricPanel& panel) {
  std::string out = "K = " + std::to_string(panel.classes) +
                    ", N = " + std::to_string(panel.total) +
                    ", rho = " + format_real(panel.rho) + '\n';
  for (const auto& [name, score] : panel.scores) {
    std::string line = name;
    line.resize(std::max<std::size_t>(line.size() + 1, 12), ' ');
    line += format_real(score.value);
    if (!score.defined) {
      line += "  (undefined: zero-denominator convention)";
    }
    out += line + '\n';
  }
  for (const auto& w : panel.warnings) {
    out += "warning: " + w + '\n';
  }
  return out;
}

void write_output(const std::string& data, const std::string& path) {
  if (path == "-" || path.empty()) {
    std::cout << data << std::flush;
    if (!std::cout) {
      throw std::runtime_error("failed writing to stdout");
    }
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << data;
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

}  // namespace corrmetrics
