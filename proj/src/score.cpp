#include "corrmetrics/score.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace corrmetrics {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) {
    throw std::invalid_argument("weight vector is empty");
  }
  for (double w : w_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and non-negative");
    }
  }
  const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("weights must sum to 1, got " +
                                std::to_string(sum));
  }
}

WeightVector WeightVector::uniform(std::size_t k) {
  return WeightVector(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

RhoParameter::RhoParameter(double rho) : rho_(rho) {
  // rho = 1 makes the per-class term 0/0 for perfectly classified classes.
  if (!(rho < 1.0) || !std::isfinite(rho)) {
    throw std::invalid_argument(
        "rho must be finite and < 1 (rho = 1 gives 0/0 when alpha_k = beta_k "
        "= C_kk), got " + std::to_string(rho));
  }
}

}  // namespace corrmetrics
