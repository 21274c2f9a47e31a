#include "corrmetrics/enhanced.hpp"

#include <cmath>
#include <stdexcept>

#include "numeric.hpp"

namespace corrmetrics {

using detail::as_real;

namespace {

struct ClassCounts {
  Count alpha;
  Count beta;
  Count hit;  // C_kk
};

ClassCounts class_counts(const ConfusionMatrix& cm, const Marginals& m,
                         std::size_t k) {
  return {m.alpha[k], m.beta[k], cm.diag(k)};
}

bool absent(const ClassCounts& c) { return c.alpha == 0 && c.beta == 0; }

// (N_k * C - alpha * beta), rearranged as (1 - rho) C^2 - (alpha - C)(beta - C)
// so that nothing cancels catastrophically as rho approaches 1.
double reduced_covariance(const ClassCounts& c, double rho) {
  const double miss = as_real((c.alpha - c.hit) * (c.beta - c.hit));
  const double hit = as_real(c.hit);
  return (1.0 - rho) * hit * hit - miss;
}

// alpha - rho C, written as (alpha - C) + (1 - rho) C.
double reduced_gap(Count margin, Count hit, double rho) {
  return as_real(margin - hit) + (1.0 - rho) * as_real(hit);
}

double reduced_length(const ClassCounts& c, double rho) {
  return as_real(c.alpha + c.beta) - rho * as_real(c.hit);
}

Score weighted_class_average(const ConfusionMatrix& cm, const WeightVector& weights,
                             double rho) {
  if (weights.size() != cm.classes()) {
    throw std::invalid_argument("weight vector length does not match K");
  }
  Score out{0.0, true};
  double weight_used = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const PerClassTerm term = delta_k_unchecked(cm, k, rho);
    if (!term.defined) {
      const Count a = cm.row_sum(k);
      const Count b = cm.col_sum(k);
      if (a != 0 || b != 0) {
        out.defined = false;
      }
      continue;
    }
    out.value += weights[k] * term.delta;
    weight_used += weights[k];
  }
  if (weight_used == 0.0) {
    return Score::undefined();
  }
  out.value = detail::clamp_unit(out.value / weight_used);
  return out;
}

}  // namespace

Score er_k(const ConfusionMatrix& cm) {
  const Marginals m = marginals(cm);
  double hits = 0.0;
  double spread = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ClassCounts c = class_counts(cm, m, k);
    if (absent(c)) {
      continue;
    }
    const double len = as_real(c.alpha + c.beta);
    hits += as_real(c.hit) / len;
    spread += as_real(c.alpha * c.beta) / (len * len);
  }
  if (spread == 0.0) {
    return Score::undefined();
  }
  return {detail::clamp_unit(hits / spread - 1.0)};
}

Score empc1(const ConfusionMatrix& cm) {
  return empc1(cm, WeightVector::uniform(cm.classes()));
}

Score empc1(const ConfusionMatrix& cm, const WeightVector& weights) {
  if (weights.size() != cm.classes()) {
    throw std::invalid_argument("weight vector length does not match K");
  }
  const Marginals m = marginals(cm);
  Score out{0.0, true};
  double weight_used = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ClassCounts c = class_counts(cm, m, k);
    if (c.alpha == 0 || c.beta == 0) {
      out.defined = out.defined && absent(c);
      continue;
    }
    const double term = as_real((c.alpha + c.beta) * c.hit) /
                            as_real(c.alpha * c.beta) - 1.0;
    out.value += weights[k] * term;
    weight_used += weights[k];
  }
  if (weight_used == 0.0) {
    return Score::undefined();
  }
  out.value = detail::clamp_unit(out.value / weight_used);
  return out;
}

Score empc2(const ConfusionMatrix& cm) { return er_k(cm); }

Score emcc(const ConfusionMatrix& cm) {
  const Marginals m = marginals(cm);
  double agreement = 1.0;
  double disagreement = 1.0;
  bool defined = true;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ClassCounts c = class_counts(cm, m, k);
    if (absent(c)) {
      continue;
    }
    if (c.alpha == 0 || c.beta == 0) {
      // C_kk = 0 here; sqrt(alpha * beta) cancels between the second product
      // and the normaliser.
      agreement = 0.0;
      defined = false;
      continue;
    }
    const double norm = std::sqrt(as_real(c.alpha * c.beta));
    agreement *= as_real(c.hit) / norm;
    disagreement *= std::sqrt(as_real((c.alpha - c.hit) * (c.beta - c.hit))) / norm;
  }
  return {detail::clamp_unit(agreement - disagreement), defined};
}

PerClassTerm delta_k(const ConfusionMatrix& cm, std::size_t k, RhoParameter rho) {
  return delta_k_unchecked(cm, k, rho.value());
}

PerClassTerm delta_k_unchecked(const ConfusionMatrix& cm, std::size_t k, double rho) {
  if (k >= cm.classes()) {
    throw std::out_of_range("class index " + std::to_string(k) + " out of range");
  }
  if (rho > 1.0) {
    throw std::invalid_argument("rho must not exceed 1");
  }
  const ClassCounts c{cm.row_sum(k), cm.col_sum(k), cm.diag(k)};
  PerClassTerm term;
  term.k = k;
  term.n_k = reduced_length(c, rho);
  if (c.alpha == 0 || c.beta == 0) {
    term.defined = false;
    return term;
  }
  const double denom =
      std::sqrt(as_real(c.alpha * c.beta) * reduced_gap(c.alpha, c.hit, rho) *
                reduced_gap(c.beta, c.hit, rho));
  if (denom == 0.0) {
    term.defined = false;
    return term;
  }
  term.delta = detail::clamp_unit(reduced_covariance(c, rho) / denom);
  return term;
}

Score empc1_rho(const ConfusionMatrix& cm, RhoParameter rho) {
  return weighted_class_average(cm, WeightVector::uniform(cm.classes()), rho.value());
}

Score empc1_rho(const ConfusionMatrix& cm, RhoParameter rho,
                const WeightVector& weights) {
  return weighted_class_average(cm, weights, rho.value());
}

Score er_k_rho(const ConfusionMatrix& cm, RhoParameter rho) {
  const double r = rho.value();
  const Marginals m = marginals(cm);
  double cov = 0.0;
  double var_t = 0.0;
  double var_c = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ClassCounts c = class_counts(cm, m, k);
    if (absent(c)) {
      continue;
    }
    const double len = reduced_length(c, r);
    const double len2 = len * len;
    cov += reduced_covariance(c, r) / len2;
    var_t += as_real(c.alpha) * reduced_gap(c.beta, c.hit, r) / len2;
    var_c += as_real(c.beta) * reduced_gap(c.alpha, c.hit, r) / len2;
  }
  const double denom = std::sqrt(var_t) * std::sqrt(var_c);
  if (denom == 0.0) {
    return Score::undefined();
  }
  return {detail::clamp_unit(cov / denom)};
}

Score empc2_rho(const ConfusionMatrix& cm, RhoParameter rho) {
  const double r = rho.value();
  const Marginals m = marginals(cm);
  double cov = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ClassCounts c = class_counts(cm, m, k);
    if (absent(c)) {
      continue;
    }
    const double len = reduced_length(c, r);
    const double len2 = len * len;
    cov += reduced_covariance(c, r) / len2;
    norm += std::sqrt(as_real(c.alpha * c.beta) * reduced_gap(c.alpha, c.hit, r) *
                      reduced_gap(c.beta, c.hit, r)) /
            len2;
  }
  if (norm == 0.0) {
    return Score::undefined();
  }
  return {detail::clamp_unit(cov / norm)};
}

bool reduced_length_exceeds_total(const ConfusionMatrix& cm) {
  const Marginals m = marginals(cm);
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    if (m.alpha[k] + m.beta[k] >= m.total) {
      return true;
    }
  }
  return false;
}

}  // namespace corrmetrics
