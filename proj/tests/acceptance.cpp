// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and sample sizes are fixed here and printed with
// each result.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "corrmetrics/binary.hpp"
#include "corrmetrics/emit.hpp"
#include "corrmetrics/enhanced.hpp"
#include "corrmetrics/experiment.hpp"
#include "corrmetrics/generator.hpp"
#include "corrmetrics/multinary.hpp"
#include "corrmetrics/oracle.hpp"
#include "support.hpp"

using namespace corrmetrics;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t worker_count() {
  return std::max<std::size_t>(4, std::thread::hardware_concurrency());
}

// Matrices shared by criteria 3, 4 and 7: 1000 per family, K in [2, 5]
// (at least 3 where the family needs it), N in [K, 2000].
std::vector<ConfusionMatrix> family_draws() {
  std::mt19937_64 eng(3);
  std::vector<ConfusionMatrix> out;
  for (Family f : kAllFamilies) {
    const std::size_t min_k = f == Family::Imbalanced32 ? 3 : 2;
    for (std::uint64_t r = 0; r < 1000; ++r) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(min_k, 5)(eng);
      const Count n = std::uniform_int_distribution<Count>(static_cast<Count>(k), 2000)(eng);
      out.push_back(generate({f, k, n}, r, 3));
    }
  }
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto cm = ConfusionMatrix::from_rows({{993, 3}, {3, 1}});
  const BinaryCounts bc = binary_counts(cm);

  const double acc = accuracy(bc).value;
  o.require(std::abs(acc - 0.994) <= 1e-12, fmt("raw accuracy %.12g (0.994 +- 1e-12)", acc));
  const double a = accuracy_rescaled(cm).value;
  o.require(std::abs(a - 0.988) <= 1e-12, fmt("rescaled A %.12g (0.988 +- 1e-12)", a));
  for (const auto& [name, s] :
       {std::pair{"MCC", mcc(bc)}, std::pair{"MPC1", mpc1(cm)}, std::pair{"EMPC1", empc1(cm)}}) {
    o.require(s.defined && std::abs(s.value - 0.246988) <= 1e-6,
              std::string(name) + fmt(" %.9f (0.246988 +- 1e-6)", s.value));
  }

  // The library value against a direct weighted Pearson evaluation of the
  // trimmed indicator pairs, which admits the fractional zero count.
  const double rho = 0.9999;
  const double lib = empc1_rho(cm, RhoParameter(rho)).value;
  const double brute = 0.5 * (testsupport::trimmed_class_pearson(cm, 0, rho) +
                              testsupport::trimmed_class_pearson(cm, 1, rho));
  o.require(std::abs(lib - brute) <= 1e-9,
            fmt("EMPC1_rho(0.9999) library %.9f vs brute force %.9f (+- 1e-9)", lib, brute));
  o.require(std::abs(lib + 0.36) <= 0.01, fmt("EMPC1_rho(0.9999) %.6f (-0.36 +- 0.01)", lib));

  // rho -> 1 limit: analytic term and the exact integer-length sequences.
  const double limit = 0.5 * (delta_k_unchecked(cm, 0, 1.0).delta +
                              delta_k_unchecked(cm, 1, 1.0).delta);
  const double seq_limit =
      0.5 * (oracle::reduced_pcc(cm, 0, 1.0).value + oracle::reduced_pcc(cm, 1, 1.0).value);
  o.require(std::abs(limit + 0.3765) <= 1e-3,
            fmt("rho -> 1 limit %.6f (-0.3765 +- 1e-3)", limit));
  o.require(std::abs(limit - seq_limit) <= 1e-12,
            fmt("rho = 1 analytic %.12f vs minimum-length sequences %.12f", limit, seq_limit));
  const double near = empc1_rho(cm, RhoParameter(1.0 - 1e-9)).value;
  o.require(std::abs(near - limit) <= 1e-6,
            fmt("EMPC1_rho(1 - 1e-9) %.9f approaches the limit (+- 1e-6)", near));

  const double ms = 1e3 * seconds_since(start);
  o.require(ms < 100.0, fmt("runtime %.3f ms (< 100 ms)", ms));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  testsupport::MatrixSource src(2);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto cm = src.diagonal(src.classes(2, 6), 1, 1000);
    for (const Score& s : {r_k(cm), mpc1(cm), mpc2(cm), er_k(cm), empc1(cm), empc2(cm), emcc(cm)}) {
      worst = std::max(worst, s.defined ? std::abs(s.value - 1.0) : INFINITY);
    }
  }
  o.require(worst <= 1e-12,
            fmt("diagonal K in [2,6], 1000 draws: max |score - 1| = %.3g over 7 metrics (<= 1e-12)",
                worst));

  double worst_hollow = 0.0;
  int rk_above = 0;
  double rk_min = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto cm = src.hollow(src.classes(3, 6), 1, 1000);
    for (const Score& s : {er_k(cm), empc1(cm), empc2(cm), emcc(cm)}) {
      worst_hollow = std::max(worst_hollow, s.defined ? std::abs(s.value + 1.0) : INFINITY);
    }
    const double rk = r_k(cm).value;
    rk_min = std::min(rk_min, rk);
    rk_above += rk > -1.0 ? 1 : 0;
  }
  o.require(worst_hollow <= 1e-12,
            fmt("hollow K in [3,6], 1000 draws: max |score + 1| = %.3g for ER_K, EMPC1, EMPC2, EMCC "
                "(<= 1e-12)",
                worst_hollow));
  o.require(rk_above >= 990,
            fmt("R_K > -1 on %.0f of 1000 hollow draws (>= 990), lowest R_K %.6f", rk_above, rk_min));

  int binary_rk_minus_one = 0;
  for (int i = 0; i < 100; ++i) {
    binary_rk_minus_one += r_k(src.hollow(2, 1, 1000)).value == -1.0 ? 1 : 0;
  }
  o.notes.push_back(fmt("info K = 2 hollow: R_K = -1 on %.0f of 100 draws (R_K is MCC there)",
                        binary_rk_minus_one));

  const double s = seconds_since(start);
  o.require(s < 10.0, fmt("runtime %.3f s (< 10 s)", s));
  return o;
}

struct Mismatch {
  std::uint64_t compared = 0;
  std::uint64_t failed = 0;
  double max_diff = 0.0;

  void add(Score a, Score b, double tol) {
    ++compared;
    const double d = std::abs(a.value - b.value);
    if (a.defined && b.defined) {
      max_diff = std::max(max_diff, d);
    }
    if (a.defined != b.defined || !(d <= tol)) {
      ++failed;
    }
  }

  std::string describe(const char* name, double tol) const {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s: %llu compared, %llu outside %.0e, max |diff| %.3g", name,
                  static_cast<unsigned long long>(compared),
                  static_cast<unsigned long long>(failed), tol, max_diff);
    return buf;
  }
};

Outcome criterion_3(const std::vector<ConfusionMatrix>& draws) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  Mismatch rk;
  Mismatch m1;
  Mismatch m2;
  Mismatch ec;
  Mismatch mc;
  for (const auto& cm : draws) {
    const auto seqs = oracle::build_sequences(cm);
    rk.add(r_k(cm), oracle::r_k_from_sequences(seqs), 1e-10);
    m1.add(mpc1(cm), oracle::mpc1_from_sequences(seqs), 1e-10);
    m2.add(mpc2(cm), oracle::mpc2_from_sequences(seqs), 1e-10);
    ec.add(emcc(cm), oracle::emcc_correlation_form(seqs), 1e-10);
    if (cm.classes() == 2) {
      mc.add(mcc(binary_counts(cm)),
             oracle::pcc(oracle::to_real(seqs.t(0)), oracle::to_real(seqs.c(0))), 1e-12);
    }
  }
  o.require(rk.failed == 0, rk.describe("R_K vs sequences", 1e-10));
  o.require(m1.failed == 0, m1.describe("MPC1 vs sequences", 1e-10));
  o.require(m2.failed == 0, m2.describe("MPC2 vs sequences", 1e-10));
  o.require(ec.failed == 0, ec.describe("EMCC vs correlation form", 1e-10));
  o.require(mc.failed == 0 && mc.compared > 0, mc.describe("MCC vs pcc of indicators", 1e-12));
  const double s = seconds_since(start);
  o.require(s < 60.0, fmt("runtime %.3f s (< 60 s)", s));
  return o;
}

Outcome criterion_4(const std::vector<ConfusionMatrix>& draws) {
  Outcome o;
  std::uint64_t compared = 0;
  std::uint64_t violations = 0;
  double worst = -INFINITY;
  for (const auto& cm : draws) {
    const Score a = r_k(cm);
    const Score b = mpc2(cm);
    if (!a.defined || !b.defined) {
      continue;
    }
    ++compared;
    const double gap = std::abs(a.value) - std::abs(b.value);
    worst = std::max(worst, gap);
    violations += gap <= 1e-12 ? 0 : 1;
  }
  o.require(violations == 0 && compared > 0,
            fmt("|R_K| <= |MPC2| + 1e-12 on %.0f defined draws, %.0f violations, max(|R_K| - "
                "|MPC2|) = %.3g",
                static_cast<double>(compared), static_cast<double>(violations), worst));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  testsupport::MatrixSource src(5);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto cm = src.binary_positive_marginals(1000);
    const Score m = mcc(binary_counts(cm));
    for (const Score& s : {r_k(cm), mpc1(cm), mpc2(cm), emcc(cm)}) {
      worst = std::max(worst, s.defined == m.defined ? std::abs(s.value - m.value) : INFINITY);
    }
  }
  o.require(worst <= 1e-12,
            fmt("1000 2x2 draws: max |{R_K, MPC1, MPC2, EMCC} - MCC| = %.3g (<= 1e-12)", worst));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  testsupport::MatrixSource src(6);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto cm = src.binary_positive_marginals(500);
    const auto seqs = oracle::build_sequences(cm);
    const auto t = oracle::to_real(seqs.t(0));
    const auto c = oracle::to_real(seqs.c(0));
    const double base = oracle::pcc(t, c).value;
    const auto t2 = oracle::affine_relabel(t, src.real(-10.0, 10.0), src.real(0.1, 10.0));
    const auto c2 = oracle::affine_relabel(c, src.real(-10.0, 10.0), src.real(0.1, 10.0));
    worst = std::max(worst, std::abs(oracle::pcc(t2, c2).value - base));
  }
  o.require(worst <= 1e-12,
            fmt("100 2x2 draws, a, alpha in [-10,10], b, beta in [0.1,10]: max |diff| = %.3g "
                "(<= 1e-12)",
                worst));
  return o;
}

Outcome criterion_7(const std::vector<ConfusionMatrix>& draws) {
  Outcome o;
  std::vector<ConfusionMatrix> all = draws;
  testsupport::MatrixSource src(7);
  for (int i = 0; i < 1000; ++i) {
    all.push_back(src.sparse(src.classes(2, 8), 1000));
  }
  std::uint64_t not_bitwise = 0;
  double worst_er = 0.0;
  double worst_e1 = 0.0;
  for (const auto& cm : all) {
    const Score e2 = empc2(cm);
    const Score er = er_k(cm);
    not_bitwise += (e2.value == er.value && e2.defined == er.defined) ? 0 : 1;
    worst_er = std::max(worst_er, std::abs(er_k_rho(cm, RhoParameter(0.0)).value - er.value));
    worst_e1 = std::max(worst_e1,
                        std::abs(empc1_rho(cm, RhoParameter(0.0)).value - empc1(cm).value));
  }
  o.require(not_bitwise == 0, fmt("EMPC2 == ER_K bitwise on %.0f matrices, %.0f differ",
                                  static_cast<double>(all.size()),
                                  static_cast<double>(not_bitwise)));
  o.require(worst_er <= 1e-12, fmt("max |er_k_rho(0) - er_k| = %.3g (<= 1e-12)", worst_er));
  o.require(worst_e1 <= 1e-12, fmt("max |empc1_rho(0) - empc1| = %.3g (<= 1e-12)", worst_e1));
  return o;
}

const MetricHistogram& find(const std::vector<MetricHistogram>& hs, Family f, Metric m) {
  for (const auto& h : hs) {
    if (h.family == f && h.metric == m) {
      return h;
    }
  }
  throw std::logic_error("histogram missing");
}

Outcome criterion_8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config;
  for (Family f : kAllFamilies) {
    config.families.push_back({f, 5, 1000});
  }
  config.replicates = 1000;
  config.master_seed = 20240601;
  config.workers = worker_count();
  const auto hs = run_experiment(config);
  const double eps = 1e-12;

  // (a) hollow
  for (Metric m : {Metric::ERK, Metric::EMPC1, Metric::EMPC2, Metric::EMCC}) {
    const auto& h = find(hs, Family::Hollow, m);
    const bool point = h.undefined_count == 0 && h.counts.front() == config.replicates &&
                       h.summary.min >= -1.0 - eps && h.summary.max <= -1.0 + eps;
    o.require(point, "(a) hollow " + std::string(metric_name(m)) +
                         fmt(": point mass at -1, range [%.15g, %.15g]", h.summary.min,
                             h.summary.max));
  }
  for (Metric m : {Metric::RK, Metric::MPC1, Metric::MPC2}) {
    const auto& h = find(hs, Family::Hollow, m);
    o.require(h.summary.min > -1.0 && h.undefined_count == 0,
              "(a) hollow " + std::string(metric_name(m)) +
                  fmt(": all mass above -1, min %.6f", h.summary.min));
  }

  // (b) imbalanced (1,4)
  const double a_med = find(hs, Family::Imbalanced14, Metric::A).summary.median;
  o.require(a_med > 0.5, fmt("(b) imbalanced_1_4 A median %.6f (> 0.5)", a_med));
  for (Metric m : {Metric::EMPC1, Metric::EMPC2}) {
    const double med = find(hs, Family::Imbalanced14, m).summary.median;
    o.require(med < 0.0,
              "(b) imbalanced_1_4 " + std::string(metric_name(m)) + fmt(" median %.6f (< 0)", med));
  }

  // (c) diagonal
  for (Metric m : {Metric::RK, Metric::MPC1, Metric::MPC2, Metric::ERK, Metric::EMPC1,
                   Metric::EMPC2, Metric::EMCC, Metric::A}) {
    const auto& h = find(hs, Family::Diagonal, m);
    const std::uint64_t defined = config.replicates - h.undefined_count;
    const bool at_one = h.counts.back() == defined && h.summary.min >= 1.0 - eps;
    std::string note = "(c) diagonal " + std::string(metric_name(m)) +
                       fmt(": every defined score at +1, min %.15g", h.summary.min);
    if (h.undefined_count > 0) {
      note += fmt(" (%.0f replicates with an empty class are undefined)",
                  static_cast<double>(h.undefined_count));
    }
    o.require(at_one, note);
  }

  // (d) imbalanced (1,4) ahead of imbalanced (3,2) on the enhanced metrics
  for (Metric m : {Metric::ERK, Metric::EMPC1, Metric::EMPC2}) {
    const double m14 = find(hs, Family::Imbalanced14, m).summary.mean;
    const double m32 = find(hs, Family::Imbalanced32, m).summary.mean;
    o.require(m14 > m32, "(d) mean " + std::string(metric_name(m)) +
                             fmt(": imbalanced_1_4 %.6f vs imbalanced_3_2 %.6f (need >)", m14,
                                 m32));
  }

  const double s = seconds_since(start);
  o.require(s < 300.0, fmt("runtime %.3f s (< 300 s)", s));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  ExperimentConfig config;
  for (Family f : kAllFamilies) {
    config.families.push_back({f, 5, 1000});
  }
  config.replicates = 300;
  config.master_seed = 99;
  auto render_with = [&](std::size_t workers, OutputFormat format) {
    ExperimentConfig c = config;
    c.workers = workers;
    return emit(run_experiment(c), c, format);
  };
  for (OutputFormat format : {OutputFormat::Csv, OutputFormat::Json}) {
    const std::string name = format == OutputFormat::Csv ? "csv" : "json";
    const std::string first = render_with(1, format);
    const std::string second = render_with(1, format);
    const std::string parallel = render_with(worker_count(), format);
    const std::string odd = render_with(3, format);
    o.require(first == second, name + ": two single-worker runs byte-identical");
    o.require(first == parallel && first == odd,
              name + fmt(": 1, 3 and %.0f workers byte-identical (%.0f bytes)",
                         static_cast<double>(worker_count()), static_cast<double>(first.size())));
  }
  return o;
}

}  // namespace

int main() {
  const auto draws = family_draws();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 worked two-class example", criterion_1},
      {"2 endpoint behaviour", criterion_2},
      {"3 oracle equivalence", [&] { return criterion_3(draws); }},
      {"4 |R_K| <= |MPC2|", [&] { return criterion_4(draws); }},
      {"5 two-class reductions", criterion_5},
      {"6 affine invariance", criterion_6},
      {"7 EMPC2 = ER_K and rho = 0 consistency", [&] { return criterion_7(draws); }},
      {"8 Monte-Carlo qualitative properties", criterion_8},
      {"9 simulate determinism", criterion_9},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %s: %s\n", name, o.pass ? "PASS" : "FAIL");
    for (const auto& note : o.notes) {
      std::printf("    %s\n", note.c_str());
    }
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
