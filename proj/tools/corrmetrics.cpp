// corrmetrics: score confusion matrices, generate random matrix families, run
// the Monte-Carlo comparison and the oracle cross-check.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 oracle mismatch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/crosscheck.hpp"
#include "corrmetrics/emit.hpp"
#include "corrmetrics/experiment.hpp"
#include "corrmetrics/generator.hpp"

namespace {

using namespace corrmetrics;

constexpr int kExitInvalid = 1;
constexpr int kExitOracleMismatch = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

Family family_or_throw(const std::string& name) {
  if (auto f = parse_family(name)) {
    return *f;
  }
  std::string known;
  for (Family f : kAllFamilies) {
    known += (known.empty() ? "" : ", ") + std::string(family_name(f));
  }
  throw std::invalid_argument("unknown family '" + name + "' (known: " + known + ")");
}

struct ScoreArgs {
  std::string path;
  double rho = RhoParameter::kDefault;
  bool transpose = false;
  std::string weights;
  std::string format = "text";
  std::string out = "-";
};

struct GenerateArgs {
  std::string family;
  std::size_t k = 5;
  Count n = 1000;
  std::uint64_t seed = 0;
  std::uint64_t reps = 1;
  std::string out = "-";
};

struct SimulateArgs {
  std::string families = "all";
  std::size_t k = 5;
  Count n = 1000;
  std::uint64_t reps = 1000;
  std::uint64_t seed = 0;
  double rho = RhoParameter::kDefault;
  std::string format = "csv";
  std::string out = "-";
  std::size_t workers = 1;
  std::size_t bins = 40;
  std::string metrics = "all";
};

struct OracleArgs {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

int run_score(const ScoreArgs& args) {
  std::optional<WeightVector> weights;
  if (!args.weights.empty()) {
    std::vector<double> w;
    for (const auto& item : split_list(args.weights)) {
      w.push_back(std::stod(item));
    }
    weights.emplace(std::move(w));
  }
  const MetricPanel panel =
      score_file(args.path, RhoParameter(args.rho), weights, args.transpose);
  std::string text;
  if (args.format == "json") {
    text = panel_json(panel);
  } else if (args.format == "csv") {
    text = panel_csv(panel);
  } else {
    text = panel_text(panel);
  }
  write_output(text, args.out);
  return 0;
}

int run_generate(const GenerateArgs& args) {
  FamilySpec spec{family_or_throw(args.family), args.k, args.n};
  spec.validate();
  std::string text;
  for (std::uint64_t r = 0; r < args.reps; ++r) {
    text += "# family=" + std::string(family_name(spec.family)) +
            " k=" + std::to_string(spec.k) + " n=" + std::to_string(spec.n) +
            " seed=" + std::to_string(args.seed) + " replicate=" + std::to_string(r) +
            '\n';
    text += render(generate(spec, r, args.seed));
  }
  write_output(text, args.out);
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  ExperimentConfig config;
  std::vector<Family> families;
  if (args.families == "all") {
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  } else {
    for (const auto& name : split_list(args.families)) {
      families.push_back(family_or_throw(name));
    }
  }
  for (Family f : families) {
    config.families.push_back({f, args.k, args.n});
  }
  if (args.metrics != "all") {
    config.metrics.clear();
    for (const auto& name : split_list(args.metrics)) {
      const auto m = parse_metric(name);
      if (!m) {
        throw std::invalid_argument("unknown metric '" + name + "'");
      }
      config.metrics.push_back(*m);
    }
  }
  config.replicates = args.reps;
  config.master_seed = args.seed;
  config.rho = RhoParameter(args.rho);
  config.histogram_bins = args.bins;
  config.workers = args.workers;

  const auto histograms = run_experiment(config);
  const OutputFormat format = args.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  write_output(emit(histograms, config, format), args.out);
  return 0;
}

int run_oracle(const OracleArgs& args) {
  const CrossCheckReport report = run_cross_check(args.trials, args.seed, args.tol);
  std::cout << format_report(report);
  return report.passed() ? 0 : kExitOracleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-based metrics for multiclass confusion matrices"};
  app.require_subcommand(1);

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "Score one confusion matrix file");
  score->add_option("file", score_args.path, "Matrix in the canonical text format")
      ->required();
  score->add_option("--rho", score_args.rho, "Reduction parameter (< 1)");
  score->add_flag("--transpose", score_args.transpose,
                  "Input has predicted classes on the rows");
  score->add_option("--weights", score_args.weights,
                    "Comma-separated class weights for MPC1/EMPC1 (sum to 1)");
  score->add_option("--format", score_args.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));
  score->add_option("--out", score_args.out, "Output path, - for stdout");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Emit random matrices of one family");
  gen->add_option("--family", gen_args.family)->required();
  gen->add_option("--k", gen_args.k);
  gen->add_option("--n", gen_args.n);
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--reps", gen_args.reps);
  gen->add_option("--out", gen_args.out);

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo metric histograms");
  sim->add_option("--families", sim_args.families, "all or comma-separated names");
  sim->add_option("--k", sim_args.k);
  sim->add_option("--n", sim_args.n);
  sim->add_option("--reps", sim_args.reps);
  sim->add_option("--seed", sim_args.seed);
  sim->add_option("--rho", sim_args.rho);
  sim->add_option("--format", sim_args.format)->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--out", sim_args.out);
  sim->add_option("--workers", sim_args.workers);
  sim->add_option("--bins", sim_args.bins);
  sim->add_option("--metrics", sim_args.metrics, "all or comma-separated names");

  OracleArgs oracle_args;
  auto* orc = app.add_subcommand("oracle", "Cross-check closed forms against sequences");
  orc->add_option("--trials", oracle_args.trials);
  orc->add_option("--seed", oracle_args.seed);
  orc->add_option("--tol", oracle_args.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (score->parsed()) {
      return run_score(score_args);
    }
    if (gen->parsed()) {
      return run_generate(gen_args);
    }
    if (sim->parsed()) {
      return run_simulate(sim_args);
    }
    return run_oracle(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
