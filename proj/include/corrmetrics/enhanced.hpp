#pragma once

#include <cstddef>

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/score.hpp"

namespace corrmetrics {

/// Correlation-based metrics evaluated on per-class indicator sequences whose
/// common zeros have been removed. They reach +1 on diagonal matrices and -1
/// on hollow ones, which R_K and the MPC metrics do not.
///
/// Class handling shared by this header:
///   - a class absent from both rows and columns (alpha_k = beta_k = 0) is
///     dropped, since it carries no information;
///   - per-class averages (EMPC1 and its rho form) also drop a class with
///     exactly one zero marginal, average over the remaining classes and mark
///     the result undefined;
///   - a score whose every class was dropped is an undefined 0.

/// Enhanced R_K, using sequence length alpha_k + beta_k per class.
Score er_k(const ConfusionMatrix& cm);

Score empc1(const ConfusionMatrix& cm);
Score empc1(const ConfusionMatrix& cm, const WeightVector& weights);

/// Identical to er_k: the two reductions coincide algebraically.
Score empc2(const ConfusionMatrix& cm);

/// Extended MCC: product over classes of diagonal agreement minus product of
/// off-diagonal disagreement, normalised by the marginals. Reduces to MCC for
/// K = 2.
///
/// Evaluated as products of per-class ratios, each in [0, 1], so no
/// intermediate can overflow. A class with exactly one zero marginal takes the
/// limit value: its agreement ratio is 0 and its disagreement ratio is 1. That
/// substitution marks the score undefined.
Score emcc(const ConfusionMatrix& cm);

struct PerClassTerm {
  std::size_t k = 0;
  double delta = 0.0;   // Pearson coefficient of the reduced sequences
  double n_k = 0.0;     // reduced length alpha_k + beta_k - rho * C_kk
  bool defined = true;  // false when alpha_k * beta_k = 0
};

/// Per-class correlation after reducing the sequences to length
/// alpha_k + beta_k - rho * C_kk.
PerClassTerm delta_k(const ConfusionMatrix& cm, std::size_t k, RhoParameter rho);

/// Same term without the rho < 1 guard; rho = 1 is the minimum-length limit
/// and yields an undefined term when alpha_k = beta_k = C_kk.
PerClassTerm delta_k_unchecked(const ConfusionMatrix& cm, std::size_t k, double rho);

Score empc1_rho(const ConfusionMatrix& cm, RhoParameter rho);
Score empc1_rho(const ConfusionMatrix& cm, RhoParameter rho,
                const WeightVector& weights);
Score er_k_rho(const ConfusionMatrix& cm, RhoParameter rho);
Score empc2_rho(const ConfusionMatrix& cm, RhoParameter rho);

/// True when some class has alpha_k + beta_k >= N. The enhanced formulas stay
/// well defined; the reduced length simply stops being a reduction.
bool reduced_length_exceeds_total(const ConfusionMatrix& cm);

}  // namespace corrmetrics
