#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/score.hpp"

// First-principles evaluation of the correlation metrics. Everything here works
// on explicit 0/1 indicator sequences and plain sample covariances; nothing
// calls into the closed-form metric modules, so the two paths can be compared.
namespace corrmetrics::oracle {

inline constexpr std::size_t kDefaultSequenceCap = 1'000'000;

/// One 0/1 indicator sequence per class for the actual (t) and predicted (c)
/// labels. Cases are laid out block-wise in (actual, predicted) lexicographic
/// order, C_kl consecutive cases per block.
class IndicatorSequences {
 public:
  IndicatorSequences(std::size_t classes, std::size_t length,
                     std::vector<std::uint8_t> t, std::vector<std::uint8_t> c);

  std::size_t classes() const noexcept { return k_; }
  std::size_t length() const noexcept { return n_; }
  std::span<const std::uint8_t> t(std::size_t k) const {
    return std::span(t_).subspan(k * n_, n_);
  }
  std::span<const std::uint8_t> c(std::size_t k) const {
    return std::span(c_).subspan(k * n_, n_);
  }

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<std::uint8_t> t_;
  std::vector<std::uint8_t> c_;
};

/// Throws std::length_error when N exceeds `cap`.
IndicatorSequences build_sequences(const ConfusionMatrix& cm,
                                   std::size_t cap = kDefaultSequenceCap);

std::vector<double> to_real(std::span<const std::uint8_t> seq);

/// Pearson correlation with 1/N normalisation. Zero variance in either input
/// yields an undefined 0.
Score pcc(std::span<const double> x, std::span<const double> y);

/// a + b * x elementwise. Requires b > 0.
std::vector<double> affine_relabel(std::span<const double> x, double a, double b);

struct CovarianceSummary {
  std::size_t classes = 0;
  std::vector<double> rtc;  // K x K, row-major, [R_tc]_kl
  std::vector<double> rtt_diag;
  std::vector<double> rcc_diag;
  std::vector<double> t_mean;
  std::vector<double> c_mean;

  double rtc_at(std::size_t k, std::size_t l) const { return rtc[k * classes + l]; }
};

CovarianceSummary covariance_summary(const IndicatorSequences& seqs);

Score r_k_from_sequences(const IndicatorSequences& seqs);
Score mpc1_from_sequences(const IndicatorSequences& seqs);
Score mpc2_from_sequences(const IndicatorSequences& seqs);
/// (k, l) entry of the correlation matrix; undefined when a variance is zero.
Score mpc_entry_from_sequences(const CovarianceSummary& cov, std::size_t k,
                               std::size_t l);

/// Indicator pair for class k with the shared zeros trimmed to length
/// alpha_k + beta_k - rho * C_kk. Only realisable when rho * C_kk is an integer
/// and rho <= 1; otherwise throws std::domain_error (use the analytic per-class
/// term instead).
struct ReducedPair {
  std::vector<std::uint8_t> t_red;
  std::vector<std::uint8_t> c_red;
  std::size_t n_k = 0;
};

ReducedPair reduce_dimension(const ConfusionMatrix& cm, std::size_t k, double rho);

/// True when every rho * C_kk is an integer, i.e. reduce_dimension succeeds.
bool reducible(const ConfusionMatrix& cm, double rho);

/// The rho family evaluated on reduced sequences: per-class Pearson averages,
/// trace-form and summed-normaliser-form ratios of the reduced covariances.
Score empc1_rho_from_sequences(const ConfusionMatrix& cm, double rho);
Score er_k_rho_from_sequences(const ConfusionMatrix& cm, double rho);
Score empc2_rho_from_sequences(const ConfusionMatrix& cm, double rho);
Score reduced_pcc(const ConfusionMatrix& cm, std::size_t k, double rho);

/// EMCC written as products of per-class sequence inner products.
Score emcc_correlation_form(const IndicatorSequences& seqs);

}  // namespace corrmetrics::oracle
