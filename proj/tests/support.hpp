#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"

namespace testsupport {

using corrmetrics::ConfusionMatrix;
using corrmetrics::Count;

// Matrix generators for property tests. They use the standard library engine
// on purpose so the library's own generator is not exercising itself.
class MatrixSource {
 public:
  explicit MatrixSource(std::uint64_t seed) : eng_(seed) {}

  std::size_t classes(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }

  Count count(Count lo, Count hi) {
    return std::uniform_int_distribution<Count>(lo, hi)(eng_);
  }

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  // Every cell in [lo, hi]; retried until N > 0.
  ConfusionMatrix dense(std::size_t k, Count lo, Count hi) {
    for (;;) {
      std::vector<Count> cells(k * k);
      Count total = 0;
      for (auto& c : cells) {
        c = count(lo, hi);
        total += c;
      }
      if (total > 0) {
        return ConfusionMatrix(k, std::move(cells));
      }
    }
  }

  // Roughly half the cells zero, which exercises degenerate marginals.
  ConfusionMatrix sparse(std::size_t k, Count hi) {
    for (;;) {
      std::vector<Count> cells(k * k);
      Count total = 0;
      for (auto& c : cells) {
        c = std::bernoulli_distribution(0.5)(eng_) ? 0 : count(1, hi);
        total += c;
      }
      if (total > 0) {
        return ConfusionMatrix(k, std::move(cells));
      }
    }
  }

  ConfusionMatrix diagonal(std::size_t k, Count lo, Count hi) {
    std::vector<Count> d(k);
    for (auto& x : d) {
      x = count(lo, hi);
    }
    return ConfusionMatrix::diagonal(d);
  }

  ConfusionMatrix hollow(std::size_t k, Count lo, Count hi) {
    std::vector<Count> cells(k * k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        if (r != c) {
          cells[r * k + c] = count(lo, hi);
        }
      }
    }
    return ConfusionMatrix(k, std::move(cells));
  }

  // 2x2 with both row sums and both column sums positive.
  ConfusionMatrix binary_positive_marginals(Count hi) {
    for (;;) {
      ConfusionMatrix cm = dense(2, 0, hi);
      if (cm.row_sum(0) > 0 && cm.row_sum(1) > 0 && cm.col_sum(0) > 0 &&
          cm.col_sum(1) > 0) {
        return cm;
      }
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline double mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) {
    s += v;
  }
  return s / static_cast<double>(x.size());
}

// Textbook two-pass Pearson correlation over weighted points. Weights may be
// fractional, which lets a test evaluate a "sequence" whose length is not an
// integer.
inline double weighted_pearson(const std::vector<double>& x, const std::vector<double>& y,
                               const std::vector<double>& w) {
  double sw = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    mx += w[i] * x[i];
    my += w[i] * y[i];
  }
  mx /= sw;
  my /= sw;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += w[i] * (x[i] - mx) * (y[i] - my);
    sxx += w[i] * (x[i] - mx) * (x[i] - mx);
    syy += w[i] * (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Correlation of the class-k indicator pair after trimming the shared zeros
// down to (1 - rho) * C_kk of them, evaluated on the four distinct
// (t, c) outcomes with their multiplicities.
inline double trimmed_class_pearson(const ConfusionMatrix& cm, std::size_t k, double rho) {
  const double hit = static_cast<double>(cm.diag(k));
  const double alpha = static_cast<double>(cm.row_sum(k));
  const double beta = static_cast<double>(cm.col_sum(k));
  return weighted_pearson({1, 1, 0, 0}, {1, 0, 1, 0},
                          {hit, alpha - hit, beta - hit, (1.0 - rho) * hit});
}

}  // namespace testsupport
