#include "corrmetrics/multinary.hpp"

#include <cmath>

#include "numeric.hpp"

namespace corrmetrics {

using detail::as_real;

MpcMatrix::MpcMatrix(std::size_t k, std::vector<double> entries,
                     std::vector<bool> defined)
    : k_(k), entries_(std::move(entries)), mask_(std::move(defined)) {
  if (entries_.size() != k_ * k_ || mask_.size() != k_ * k_) {
    throw std::invalid_argument("MPC matrix storage does not match K");
  }
}

std::optional<double> MpcMatrix::at(std::size_t k, std::size_t l) const {
  if (!mask_[k * k_ + l]) {
    return std::nullopt;
  }
  return entries_[k * k_ + l];
}

// All numerators below are N^2 times a sample covariance of the indicators,
// and the 1/N^2 factor cancels in every ratio. N * C_kl - alpha_k * beta_l is
// exact in 64 bits because N <= 2^31.

Score r_k(const ConfusionMatrix& cm) {
  const Marginals m = marginals(cm);
  const Count n = m.total;
  Count numer = n * cm.trace();
  double tt = 0.0;
  double cc = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    numer -= m.alpha[k] * m.beta[k];
    tt += as_real(m.alpha[k] * (n - m.alpha[k]));
    cc += as_real(m.beta[k] * (n - m.beta[k]));
  }
  if (tt == 0.0 || cc == 0.0) {
    return Score::undefined();
  }
  return {detail::clamp_unit(as_real(numer) / (std::sqrt(tt) * std::sqrt(cc)))};
}

MpcMatrix mpc_matrix(const ConfusionMatrix& cm) {
  const std::size_t k = cm.classes();
  const Marginals m = marginals(cm);
  const Count n = m.total;
  std::vector<double> entries(k * k, 0.0);
  std::vector<bool> mask(k * k, false);
  for (std::size_t r = 0; r < k; ++r) {
    const double tt = as_real(m.alpha[r] * (n - m.alpha[r]));
    for (std::size_t c = 0; c < k; ++c) {
      const double cc = as_real(m.beta[c] * (n - m.beta[c]));
      if (tt == 0.0 || cc == 0.0) {
        continue;
      }
      const Count numer = n * cm(r, c) - m.alpha[r] * m.beta[c];
      entries[r * k + c] = detail::clamp_unit(as_real(numer) / std::sqrt(tt * cc));
      mask[r * k + c] = true;
    }
  }
  return MpcMatrix(k, std::move(entries), std::move(mask));
}

Score mpc1(const ConfusionMatrix& cm) {
  return mpc1(cm, WeightVector::uniform(cm.classes()));
}

Score mpc1(const ConfusionMatrix& cm, const WeightVector& weights) {
  if (weights.size() != cm.classes()) {
    throw std::invalid_argument("weight vector length does not match K");
  }
  const MpcMatrix mpc = mpc_matrix(cm);
  Score out{0.0, true};
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    if (auto v = mpc.at(k, k)) {
      out.value += weights[k] * *v;
    } else {
      out.defined = false;
    }
  }
  out.value = detail::clamp_unit(out.value);
  return out;
}

Score mpc2(const ConfusionMatrix& cm) {
  const Marginals m = marginals(cm);
  const Count n = m.total;
  Count numer = n * cm.trace();
  double denom = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    numer -= m.alpha[k] * m.beta[k];
    denom += std::sqrt(as_real(m.alpha[k] * (n - m.alpha[k])) *
                       as_real(m.beta[k] * (n - m.beta[k])));
  }
  if (denom == 0.0) {
    return Score::undefined();
  }
  return {detail::clamp_unit(as_real(numer) / denom)};
}

Score accuracy_rescaled(const ConfusionMatrix& cm) {
  return {2.0 * as_real(cm.trace()) / as_real(cm.total()) - 1.0};
}

}  // namespace corrmetrics
