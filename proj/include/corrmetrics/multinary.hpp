#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/score.hpp"

namespace corrmetrics {

/// Multivariate Pearson correlation matrix. Entry (k, l) is the correlation of
/// the actual-class-k indicator with the predicted-class-l indicator. Entries
/// whose normaliser vanishes are masked out rather than given a sentinel.
class MpcMatrix {
 public:
  MpcMatrix(std::size_t k, std::vector<double> entries, std::vector<bool> defined);

  std::size_t classes() const noexcept { return k_; }
  bool defined(std::size_t k, std::size_t l) const { return mask_[k * k_ + l]; }
  /// Empty when the entry is masked.
  std::optional<double> at(std::size_t k, std::size_t l) const;

 private:
  std::size_t k_;
  std::vector<double> entries_;
  std::vector<bool> mask_;
};

/// Trace-based extension of MCC (Gorodkin's R_K), evaluated from C directly.
Score r_k(const ConfusionMatrix& cm);

MpcMatrix mpc_matrix(const ConfusionMatrix& cm);

/// Average of the per-class Pearson coefficients (the MPC diagonal). A class
/// with a vanishing normaliser contributes 0 and marks the result undefined.
Score mpc1(const ConfusionMatrix& cm);
Score mpc1(const ConfusionMatrix& cm, const WeightVector& weights);

/// Ratio of summed per-class covariances to summed per-class normalisers.
Score mpc2(const ConfusionMatrix& cm);

/// Accuracy rescaled onto [-1, 1]: 2 * trace / N - 1.
Score accuracy_rescaled(const ConfusionMatrix& cm);

}  // namespace corrmetrics
