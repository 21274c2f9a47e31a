#include "corrmetrics/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace corrmetrics::oracle {

IndicatorSequences::IndicatorSequences(std::size_t classes, std::size_t length,
                                       std::vector<std::uint8_t> t,
                                       std::vector<std::uint8_t> c)
    : k_(classes), n_(length), t_(std::move(t)), c_(std::move(c)) {
  if (t_.size() != k_ * n_ || c_.size() != k_ * n_) {
    throw std::invalid_argument("indicator storage does not match K x N");
  }
}

IndicatorSequences build_sequences(const ConfusionMatrix& cm, std::size_t cap) {
  const std::size_t k = cm.classes();
  const auto n = static_cast<std::size_t>(cm.total());
  if (n > cap) {
    throw std::length_error("N = " + std::to_string(n) +
                            " exceeds the sequence cap of " + std::to_string(cap));
  }
  std::vector<std::uint8_t> t(k * n, 0);
  std::vector<std::uint8_t> c(k * n, 0);
  std::size_t pos = 0;
  for (std::size_t actual = 0; actual < k; ++actual) {
    for (std::size_t predicted = 0; predicted < k; ++predicted) {
      for (Count i = 0; i < cm(actual, predicted); ++i, ++pos) {
        t[actual * n + pos] = 1;
        c[predicted * n + pos] = 1;
      }
    }
  }
  return IndicatorSequences(k, n, std::move(t), std::move(c));
}

std::vector<double> to_real(std::span<const std::uint8_t> seq) {
  return {seq.begin(), seq.end()};
}

Score pcc(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("pcc needs two sequences of equal length >= 2");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  double scale_x = 0.0;
  double scale_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
    scale_x += x[i] * x[i];
    scale_y += y[i] * y[i];
  }
  // Residual rounding in the mean of a constant sequence is ~1e-16 relative.
  constexpr double kFlat = 1e-24;
  if (sxx <= kFlat * scale_x || syy <= kFlat * scale_y) {
    return Score::undefined();
  }
  return {(sxy / n) / std::sqrt((sxx / n) * (syy / n))};
}

std::vector<double> affine_relabel(std::span<const double> x, double a, double b) {
  if (!(b > 0.0)) {
    throw std::invalid_argument("affine relabelling needs a positive scale");
  }
  std::vector<double> out;
  out.reserve(x.size());
  for (double v : x) {
    out.push_back(a + b * v);
  }
  return out;
}

CovarianceSummary covariance_summary(const IndicatorSequences& seqs) {
  const std::size_t k = seqs.classes();
  const std::size_t n = seqs.length();
  const auto nn = static_cast<double>(n);
  CovarianceSummary out;
  out.classes = k;
  out.t_mean.assign(k, 0.0);
  out.c_mean.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = 0; s < n; ++s) {
      out.t_mean[i] += seqs.t(i)[s];
      out.c_mean[i] += seqs.c(i)[s];
    }
    out.t_mean[i] /= nn;
    out.c_mean[i] /= nn;
  }
  out.rtc.assign(k * k, 0.0);
  out.rtt_diag.assign(k, 0.0);
  out.rcc_diag.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto ti = seqs.t(i);
    const auto ci = seqs.c(i);
    for (std::size_t s = 0; s < n; ++s) {
      const double dt = ti[s] - out.t_mean[i];
      const double dc = ci[s] - out.c_mean[i];
      out.rtt_diag[i] += dt * dt;
      out.rcc_diag[i] += dc * dc;
    }
    out.rtt_diag[i] /= nn;
    out.rcc_diag[i] /= nn;
    for (std::size_t j = 0; j < k; ++j) {
      const auto cj = seqs.c(j);
      double acc = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        acc += (ti[s] - out.t_mean[i]) * (cj[s] - out.c_mean[j]);
      }
      out.rtc[i * k + j] = acc / nn;
    }
  }
  return out;
}

Score r_k_from_sequences(const IndicatorSequences& seqs) {
  const CovarianceSummary cov = covariance_summary(seqs);
  double tr_tc = 0.0;
  double tr_tt = 0.0;
  double tr_cc = 0.0;
  for (std::size_t k = 0; k < cov.classes; ++k) {
    tr_tc += cov.rtc_at(k, k);
    tr_tt += cov.rtt_diag[k];
    tr_cc += cov.rcc_diag[k];
  }
  if (tr_tt <= 0.0 || tr_cc <= 0.0) {
    return Score::undefined();
  }
  return {tr_tc / std::sqrt(tr_tt * tr_cc)};
}

Score mpc_entry_from_sequences(const CovarianceSummary& cov, std::size_t k,
                               std::size_t l) {
  const double norm = cov.rtt_diag[k] * cov.rcc_diag[l];
  if (norm <= 0.0) {
    return Score::undefined();
  }
  return {cov.rtc_at(k, l) / std::sqrt(norm)};
}

Score mpc1_from_sequences(const IndicatorSequences& seqs) {
  const CovarianceSummary cov = covariance_summary(seqs);
  Score out{0.0, true};
  for (std::size_t k = 0; k < cov.classes; ++k) {
    const Score term = mpc_entry_from_sequences(cov, k, k);
    out.value += term.value;
    out.defined = out.defined && term.defined;
  }
  out.value /= static_cast<double>(cov.classes);
  return out;
}

Score mpc2_from_sequences(const IndicatorSequences& seqs) {
  const CovarianceSummary cov = covariance_summary(seqs);
  double tr_tc = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < cov.classes; ++k) {
    tr_tc += cov.rtc_at(k, k);
    norm += std::sqrt(cov.rtt_diag[k] * cov.rcc_diag[k]);
  }
  if (norm <= 0.0) {
    return Score::undefined();
  }
  return {tr_tc / norm};
}

namespace {

// rho * C_kk as an exact integer, if it is one.
bool integral_trim(double rho, Count hit, Count& out) {
  const double raw = rho * static_cast<double>(hit);
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) > 1e-9 * std::max(1.0, std::abs(raw))) {
    return false;
  }
  out = static_cast<Count>(rounded);
  return true;
}

struct ReducedMoments {
  double cov = 0.0;  // 1/N_k normalisation
  double var_t = 0.0;
  double var_c = 0.0;
};

ReducedMoments reduced_moments(const ConfusionMatrix& cm, std::size_t k, double rho) {
  const ReducedPair pair = reduce_dimension(cm, k, rho);
  ReducedMoments m;
  if (pair.n_k == 0) {
    return m;  // absent class contributes nothing
  }
  const auto n = static_cast<double>(pair.n_k);
  double mt = 0.0;
  double mc = 0.0;
  for (std::size_t s = 0; s < pair.n_k; ++s) {
    mt += pair.t_red[s];
    mc += pair.c_red[s];
  }
  mt /= n;
  mc /= n;
  for (std::size_t s = 0; s < pair.n_k; ++s) {
    const double dt = pair.t_red[s] - mt;
    const double dc = pair.c_red[s] - mc;
    m.cov += dt * dc;
    m.var_t += dt * dt;
    m.var_c += dc * dc;
  }
  m.cov /= n;
  m.var_t /= n;
  m.var_c /= n;
  return m;
}

}  // namespace

bool reducible(const ConfusionMatrix& cm, double rho) {
  if (rho > 1.0) {
    return false;
  }
  Count trim = 0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    if (!integral_trim(rho, cm.diag(k), trim)) {
      return false;
    }
  }
  return true;
}

ReducedPair reduce_dimension(const ConfusionMatrix& cm, std::size_t k, double rho) {
  if (k >= cm.classes()) {
    throw std::out_of_range("class index out of range");
  }
  if (rho > 1.0) {
    throw std::domain_error("rho > 1 would drop shared ones");
  }
  const Count hit = cm.diag(k);
  Count trim = 0;
  if (!integral_trim(rho, hit, trim)) {
    throw std::domain_error("rho * C_kk = " + std::to_string(rho * static_cast<double>(hit)) +
                            " is not an integer; use the analytic per-class term");
  }
  Count alpha = 0;
  Count beta = 0;
  for (std::size_t j = 0; j < cm.classes(); ++j) {
    alpha += cm(k, j);
    beta += cm(j, k);
  }
  // Minimum length alpha + beta - C holds every one; the remaining
  // C - trim positions are zeros shared by both sequences.
  const Count shared_zeros = hit - trim;
  ReducedPair pair;
  pair.n_k = static_cast<std::size_t>(alpha + beta - trim);
  pair.t_red.reserve(pair.n_k);
  pair.c_red.reserve(pair.n_k);
  auto push = [&](Count count, std::uint8_t tv, std::uint8_t cv) {
    for (Count i = 0; i < count; ++i) {
      pair.t_red.push_back(tv);
      pair.c_red.push_back(cv);
    }
  };
  push(hit, 1, 1);
  push(alpha - hit, 1, 0);
  push(beta - hit, 0, 1);
  push(shared_zeros, 0, 0);
  return pair;
}

Score reduced_pcc(const ConfusionMatrix& cm, std::size_t k, double rho) {
  const ReducedPair pair = reduce_dimension(cm, k, rho);
  if (pair.n_k < 2) {
    return Score::undefined();
  }
  const auto t = to_real(pair.t_red);
  const auto c = to_real(pair.c_red);
  return pcc(t, c);
}

Score empc1_rho_from_sequences(const ConfusionMatrix& cm, double rho) {
  Score out{0.0, true};
  std::size_t used = 0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ReducedPair pair = reduce_dimension(cm, k, rho);
    if (pair.n_k == 0) {
      continue;  // class absent from the matrix
    }
    const Score term = pair.n_k < 2 ? Score::undefined()
                                    : pcc(to_real(pair.t_red), to_real(pair.c_red));
    if (!term.defined) {
      out.defined = false;
      continue;
    }
    out.value += term.value;
    ++used;
  }
  if (used == 0) {
    return Score::undefined();
  }
  out.value /= static_cast<double>(used);
  return out;
}

Score er_k_rho_from_sequences(const ConfusionMatrix& cm, double rho) {
  double cov = 0.0;
  double var_t = 0.0;
  double var_c = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ReducedMoments m = reduced_moments(cm, k, rho);
    cov += m.cov;
    var_t += m.var_t;
    var_c += m.var_c;
  }
  if (var_t <= 0.0 || var_c <= 0.0) {
    return Score::undefined();
  }
  return {cov / std::sqrt(var_t * var_c)};
}

Score empc2_rho_from_sequences(const ConfusionMatrix& cm, double rho) {
  double cov = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < cm.classes(); ++k) {
    const ReducedMoments m = reduced_moments(cm, k, rho);
    cov += m.cov;
    norm += std::sqrt(m.var_t * m.var_c);
  }
  if (norm <= 0.0) {
    return Score::undefined();
  }
  return {cov / norm};
}

Score emcc_correlation_form(const IndicatorSequences& seqs) {
  double similarity = 1.0;
  double dissimilarity = 1.0;
  bool defined = true;
  for (std::size_t k = 0; k < seqs.classes(); ++k) {
    const auto t = seqs.t(k);
    const auto c = seqs.c(k);
    double tc = 0.0;
    double tt = 0.0;
    double cc = 0.0;
    double t_not_c = 0.0;
    double c_not_t = 0.0;
    for (std::size_t s = 0; s < seqs.length(); ++s) {
      const double tv = t[s];
      const double cv = c[s];
      tc += tv * cv;
      tt += tv * tv;
      cc += cv * cv;
      t_not_c += tv * (tv - cv);
      c_not_t += cv * (cv - tv);
    }
    if (tt == 0.0 && cc == 0.0) {
      continue;
    }
    if (tt == 0.0 || cc == 0.0) {
      // Limit of the class factors as the empty marginal goes to zero.
      similarity = 0.0;
      defined = false;
      continue;
    }
    similarity *= tc / std::sqrt(tt * cc);
    dissimilarity *= std::sqrt(t_not_c * c_not_t / (tt * cc));
  }
  return {similarity - dissimilarity, defined};
}

}  // namespace corrmetrics::oracle
