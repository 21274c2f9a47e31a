#include "corrmetrics/binary.hpp"

#include <cmath>

#include "numeric.hpp"

namespace corrmetrics {

Score f1(const BinaryCounts& counts) {
  const Count denom = 2 * counts.tp + counts.fp + counts.fn;
  if (denom == 0) {
    return Score::undefined();
  }
  return {static_cast<double>(2 * counts.tp) / static_cast<double>(denom)};
}

Score accuracy(const BinaryCounts& counts) {
  const Count n = counts.total();
  if (n == 0) {
    return Score::undefined();
  }
  return {static_cast<double>(counts.tp + counts.tn) / static_cast<double>(n)};
}

Score mcc(const BinaryCounts& counts) {
  const auto& [tp, fn, fp, tn] = counts;
  const double a = static_cast<double>(tp + fn);
  const double b = static_cast<double>(tp + fp);
  const double c = static_cast<double>(tn + fp);
  const double d = static_cast<double>(tn + fn);
  if (a == 0.0 || b == 0.0 || c == 0.0 || d == 0.0) {
    return Score::undefined();
  }
  const double numer = static_cast<double>(tp * tn - fp * fn);
  return {detail::clamp_unit(numer / std::sqrt(a * b * c * d))};
}

}  // namespace corrmetrics
