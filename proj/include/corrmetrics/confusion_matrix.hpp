#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corrmetrics {

using Count = std::int64_t;

/// Largest accepted total N. Keeps N*C_kk and alpha_k*beta_k exact in 64-bit.
inline constexpr Count kMaxTotal = (Count{1} << 31) - 1;

enum class ParseErrorKind {
  Empty,
  NonSquare,
  NegativeEntry,
  NonInteger,
  AllZero,
  TooFewClasses,
  LabelMismatch,
  TotalTooLarge,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t row, std::size_t column,
             const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based; 0 when the error is not tied to a position.
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t row_;
  std::size_t column_;
};

struct Marginals {
  std::vector<Count> alpha;  // row sums (actual class sizes)
  std::vector<Count> beta;   // column sums (predicted class sizes)
  Count total = 0;
};

struct StructureFlags {
  bool is_diagonal = false;
  bool is_hollow = false;
  std::vector<std::size_t> zero_rows;  // 0-based
  std::vector<std::size_t> zero_cols;
};

/// Counts of a 2x2 matrix with row 0 as the positive class.
struct BinaryCounts {
  Count tp = 0;
  Count fn = 0;
  Count fp = 0;
  Count tn = 0;

  Count total() const noexcept { return tp + fn + fp + tn; }
  bool operator==(const BinaryCounts&) const = default;
};

/// K x K matrix of non-negative counts. Entry (k, l) is the number of cases of
/// actual class k predicted as class l. Immutable once constructed.
class ConfusionMatrix {
 public:
  /// Row-major counts. Throws ParseError on any violated invariant.
  ConfusionMatrix(std::size_t k, std::vector<Count> counts,
                  std::vector<std::string> labels = {});

  static ConfusionMatrix from_rows(const std::vector<std::vector<Count>>& rows,
                                   std::vector<std::string> labels = {});
  static ConfusionMatrix diagonal(std::span<const Count> diag);

  std::size_t classes() const noexcept { return k_; }
  Count total() const noexcept { return total_; }
  Count operator()(std::size_t actual, std::size_t predicted) const {
    return counts_[actual * k_ + predicted];
  }
  Count diag(std::size_t k) const { return counts_[k * k_ + k]; }
  std::span<const Count> counts() const noexcept { return counts_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Count row_sum(std::size_t k) const;
  Count col_sum(std::size_t k) const;
  Count trace() const;

  ConfusionMatrix transposed() const;
  ConfusionMatrix scaled(Count factor) const;

  bool operator==(const ConfusionMatrix& other) const = default;

 private:
  std::size_t k_;
  std::vector<Count> counts_;
  std::vector<std::string> labels_;
  Count total_ = 0;
};

Marginals marginals(const ConfusionMatrix& cm);
StructureFlags structure(const ConfusionMatrix& cm);

/// Throws std::invalid_argument unless cm is 2x2.
BinaryCounts binary_counts(const ConfusionMatrix& cm);

/// Canonical text: optional `labels: a,b` line, `#` comments, blank lines
/// ignored, then K rows of K integers separated by commas and/or whitespace.
ConfusionMatrix parse_confusion_matrix(std::string_view text);
ConfusionMatrix read_confusion_matrix(const std::string& path);

/// Inverse of parse_confusion_matrix: comma-separated, LF-terminated rows.
std::string render(const ConfusionMatrix& cm);

}  // namespace corrmetrics
