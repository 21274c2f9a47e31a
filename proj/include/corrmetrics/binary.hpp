#pragma once

#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/score.hpp"

namespace corrmetrics {

// 2TP / (2TP + FP + FN). All-TN input yields an undefined 0.
Score f1(const BinaryCounts& counts);

// (TP + TN) / N.
Score accuracy(const BinaryCounts& counts);

// Matthews correlation coefficient. Any zero marginal yields an undefined 0.
Score mcc(const BinaryCounts& counts);

}  // namespace corrmetrics
