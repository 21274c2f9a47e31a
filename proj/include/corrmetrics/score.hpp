#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace corrmetrics {

/// A metric value. `defined` is false when a zero-denominator convention
/// produced the value instead of the formula itself.
struct Score {
  double value = 0.0;
  bool defined = true;

  static Score undefined() { return {0.0, false}; }
};

/// Non-negative class weights summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(std::size_t k);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t k) const { return w_[k]; }
  std::span<const double> values() const noexcept { return w_; }

 private:
  std::vector<double> w_;
};

/// Reduction parameter for the per-class sequence length
/// N_k = alpha_k + beta_k - rho * C_kk. Must be strictly below one.
class RhoParameter {
 public:
  static constexpr double kDefault = 0.9;

  explicit RhoParameter(double rho = kDefault);
  double value() const noexcept { return rho_; }

 private:
  double rho_;
};

}  // namespace corrmetrics
