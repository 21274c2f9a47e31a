#include "corrmetrics/crosscheck.hpp"

#include <algorithm>
#include <cmath>

#include "corrmetrics/binary.hpp"
#include "corrmetrics/emit.hpp"
#include "corrmetrics/enhanced.hpp"
#include "corrmetrics/generator.hpp"
#include "corrmetrics/multinary.hpp"
#include "corrmetrics/oracle.hpp"

namespace corrmetrics {

namespace {

CheckResult& check(CrossCheckReport& report, const std::string& name) {
  for (auto& c : report.checks) {
    if (c.name == name) {
      return c;
    }
  }
  report.checks.push_back({name});
  return report.checks.back();
}

void record(CrossCheckReport& report, const std::string& name, Score closed,
            Score sequence) {
  CheckResult& c = check(report, name);
  ++c.compared;
  if (closed.defined != sequence.defined) {
    ++c.mismatches;
    return;
  }
  const double diff = std::abs(closed.value - sequence.value);
  c.max_abs_diff = std::max(c.max_abs_diff, diff);
  if (closed.defined && !(diff <= report.tolerance)) {
    ++c.mismatches;
  }
}

void record_rho_family(const ConfusionMatrix& cm, double rho,
                       CrossCheckReport& report) {
  const std::string suffix = "(rho=" + format_real(rho) + ")";
  const RhoParameter r(rho);
  record(report, "ER_K_rho" + suffix, er_k_rho(cm, r),
         oracle::er_k_rho_from_sequences(cm, rho));
  record(report, "EMPC1_rho" + suffix, empc1_rho(cm, r),
         oracle::empc1_rho_from_sequences(cm, rho));
  record(report, "EMPC2_rho" + suffix, empc2_rho(cm, r),
         oracle::empc2_rho_from_sequences(cm, rho));
}

}  // namespace

bool CrossCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.mismatches == 0; });
}

void cross_check_matrix(const ConfusionMatrix& cm, CrossCheckReport& report) {
  const auto seqs = oracle::build_sequences(cm);
  const auto cov = oracle::covariance_summary(seqs);

  record(report, "R_K", r_k(cm), oracle::r_k_from_sequences(seqs));
  record(report, "MPC1", mpc1(cm), oracle::mpc1_from_sequences(seqs));
  record(report, "MPC2", mpc2(cm), oracle::mpc2_from_sequences(seqs));

  const MpcMatrix mpc = mpc_matrix(cm);
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    for (std::size_t l = 0; l < cm.classes(); ++l) {
      const auto entry = mpc.at(k, l);
      record(report, "MPC_matrix",
             entry ? Score{*entry} : Score::undefined(),
             oracle::mpc_entry_from_sequences(cov, k, l));
    }
  }

  record(report, "EMCC", emcc(cm), oracle::emcc_correlation_form(seqs));

  if (cm.classes() == 2) {
    record(report, "MCC", mcc(binary_counts(cm)),
           oracle::pcc(oracle::to_real(seqs.t(0)), oracle::to_real(seqs.c(0))));
  }

  record(report, "ER_K", er_k(cm), oracle::er_k_rho_from_sequences(cm, 0.0));
  record(report, "EMPC1", empc1(cm), oracle::empc1_rho_from_sequences(cm, 0.0));
  record(report, "EMPC2", empc2(cm), oracle::empc2_rho_from_sequences(cm, 0.0));

  record_rho_family(cm, 0.0, report);
  record_rho_family(cm, -1.0, report);
  if (oracle::reducible(cm, 0.5)) {
    record_rho_family(cm, 0.5, report);
  }
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const PerClassTerm term = delta_k_unchecked(cm, k, 1.0);
    record(report, "Delta_k(rho=1)",
           term.defined ? Score{term.delta} : Score::undefined(),
           oracle::reduced_pcc(cm, k, 1.0));
  }
}

CrossCheckReport run_cross_check(std::uint64_t trials, std::uint64_t seed,
                                 double tolerance) {
  CrossCheckReport report;
  report.trials = trials;
  report.tolerance = tolerance;
  Xoshiro256 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    FamilySpec spec;
    spec.family = kAllFamilies[i % kAllFamilies.size()];
    const std::size_t min_k = spec.family == Family::Imbalanced32 ? 3 : 2;
    spec.k = min_k + rng.next() % (6 - min_k);
    spec.n = static_cast<Count>(spec.k) +
             static_cast<Count>(rng.next() % (2001 - spec.k));
    cross_check_matrix(generate(spec, i, seed), report);
  }
  return report;
}

std::string format_report(const CrossCheckReport& report) {
  std::string out = "oracle cross-check: " + std::to_string(report.trials) +
                    " matrices, tolerance " + format_real(report.tolerance) + '\n';
  for (const auto& c : report.checks) {
    std::string name = c.name;
    name.resize(std::max<std::size_t>(name.size() + 1, 24), ' ');
    out += name + std::to_string(c.compared) + " compared, " +
           std::to_string(c.mismatches) + " mismatches, max |diff| " +
           format_real(c.max_abs_diff) + (c.mismatches ? "  FAIL" : "  ok") + '\n';
  }
  out += report.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace corrmetrics
