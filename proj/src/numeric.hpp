#pragma once

#include <algorithm>

#include "corrmetrics/confusion_matrix.hpp"

namespace corrmetrics::detail {

// Rounding can push a correlation a few ulps past +-1.
inline double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

inline double as_real(Count c) { return static_cast<double>(c); }

}  // namespace corrmetrics::detail
