#include "corrmetrics/confusion_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace corrmetrics {

namespace {

std::string position(std::size_t row, std::size_t column) {
  std::string out;
  if (row > 0) {
    out += "row " + std::to_string(row);
  }
  if (column > 0) {
    out += (out.empty() ? "" : ", ") + std::string("column ") +
           std::to_string(column);
  }
  return out;
}

[[noreturn]] void fail(ParseErrorKind kind, std::size_t row, std::size_t col,
                       const std::string& msg) {
  std::string where = position(row, col);
  throw ParseError(kind, row, col, where.empty() ? msg : where + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      ++i;
    }
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      ++i;
    }
    if (i > begin) {
      fields.push_back(line.substr(begin, i - begin));
    }
  }
  return fields;
}

Count parse_count(std::string_view field, std::size_t row, std::size_t col) {
  if (field.empty()) {
    fail(ParseErrorKind::NonInteger, row, col, "empty entry");
  }
  Count value = 0;
  const char* begin = field.data();
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    fail(ParseErrorKind::TotalTooLarge, row, col,
         "entry '" + std::string(field) + "' is out of range");
  }
  if (ec != std::errc{} || ptr != end) {
    fail(ParseErrorKind::NonInteger, row, col,
         "entry '" + std::string(field) + "' is not an integer");
  }
  if (value < 0) {
    fail(ParseErrorKind::NegativeEntry, row, col,
         "entry " + std::to_string(value) + " is negative");
  }
  return value;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t row,
                       std::size_t column, const std::string& what)
    : std::runtime_error(what), kind_(kind), row_(row), column_(column) {}

ConfusionMatrix::ConfusionMatrix(std::size_t k, std::vector<Count> counts,
                                 std::vector<std::string> labels)
    : k_(k), counts_(std::move(counts)), labels_(std::move(labels)) {
  if (k_ < 2) {
    fail(ParseErrorKind::TooFewClasses, 0, 0,
         "need at least 2 classes, got " + std::to_string(k_));
  }
  if (counts_.size() != k_ * k_) {
    fail(ParseErrorKind::NonSquare, 0, 0,
         "expected " + std::to_string(k_ * k_) + " entries, got " +
             std::to_string(counts_.size()));
  }
  if (!labels_.empty() && labels_.size() != k_) {
    fail(ParseErrorKind::LabelMismatch, 0, 0,
         std::to_string(labels_.size()) + " labels for " + std::to_string(k_) +
             " classes");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const Count c = counts_[i];
    if (c < 0) {
      fail(ParseErrorKind::NegativeEntry, i / k_ + 1, i % k_ + 1,
           "entry " + std::to_string(c) + " is negative");
    }
    if (c > kMaxTotal - total_) {
      fail(ParseErrorKind::TotalTooLarge, i / k_ + 1, i % k_ + 1,
           "total exceeds " + std::to_string(kMaxTotal));
    }
    total_ += c;
  }
  if (total_ == 0) {
    fail(ParseErrorKind::AllZero, 0, 0, "matrix has no cases");
  }
}

ConfusionMatrix ConfusionMatrix::from_rows(
    const std::vector<std::vector<Count>>& rows,
    std::vector<std::string> labels) {
  const std::size_t k = rows.size();
  std::vector<Count> flat;
  flat.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    if (rows[r].size() != k) {
      fail(ParseErrorKind::NonSquare, r + 1, 0,
           "has " + std::to_string(rows[r].size()) + " entries, expected " +
               std::to_string(k));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return ConfusionMatrix(k, std::move(flat), std::move(labels));
}

ConfusionMatrix ConfusionMatrix::diagonal(std::span<const Count> diag) {
  const std::size_t k = diag.size();
  std::vector<Count> flat(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    flat[i * k + i] = diag[i];
  }
  return ConfusionMatrix(k, std::move(flat));
}

Count ConfusionMatrix::row_sum(std::size_t k) const {
  const auto row = counts().subspan(k * k_, k_);
  return std::accumulate(row.begin(), row.end(), Count{0});
}

Count ConfusionMatrix::col_sum(std::size_t k) const {
  Count sum = 0;
  for (std::size_t r = 0; r < k_; ++r) {
    sum += (*this)(r, k);
  }
  return sum;
}

Count ConfusionMatrix::trace() const {
  Count sum = 0;
  for (std::size_t k = 0; k < k_; ++k) {
    sum += diag(k);
  }
  return sum;
}

ConfusionMatrix ConfusionMatrix::transposed() const {
  std::vector<Count> flat(counts_.size());
  for (std::size_t r = 0; r < k_; ++r) {
    for (std::size_t c = 0; c < k_; ++c) {
      flat[c * k_ + r] = (*this)(r, c);
    }
  }
  return ConfusionMatrix(k_, std::move(flat), labels_);
}

ConfusionMatrix ConfusionMatrix::scaled(Count factor) const {
  if (factor < 1 || total_ > kMaxTotal / factor) {
    throw std::invalid_argument("scale factor must be >= 1 and keep N in range");
  }
  std::vector<Count> flat(counts_);
  for (auto& c : flat) {
    c *= factor;
  }
  return ConfusionMatrix(k_, std::move(flat), labels_);
}

Marginals marginals(const ConfusionMatrix& cm) {
  const std::size_t k = cm.classes();
  Marginals m;
  m.alpha.assign(k, 0);
  m.beta.assign(k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      m.alpha[r] += cm(r, c);
      m.beta[c] += cm(r, c);
    }
  }
  m.total = cm.total();
  return m;
}

StructureFlags structure(const ConfusionMatrix& cm) {
  const std::size_t k = cm.classes();
  StructureFlags flags;
  flags.is_diagonal = true;
  flags.is_hollow = true;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (r == c) {
        flags.is_hollow = flags.is_hollow && cm(r, c) == 0;
      } else {
        flags.is_diagonal = flags.is_diagonal && cm(r, c) == 0;
      }
    }
  }
  const Marginals m = marginals(cm);
  for (std::size_t i = 0; i < k; ++i) {
    if (m.alpha[i] == 0) {
      flags.zero_rows.push_back(i);
    }
    if (m.beta[i] == 0) {
      flags.zero_cols.push_back(i);
    }
  }
  return flags;
}

BinaryCounts binary_counts(const ConfusionMatrix& cm) {
  if (cm.classes() != 2) {
    throw std::invalid_argument("binary metrics need a 2x2 matrix, got " +
                                std::to_string(cm.classes()) + "x" +
                                std::to_string(cm.classes()));
  }
  return {cm(0, 0), cm(0, 1), cm(1, 0), cm(1, 1)};
}

ConfusionMatrix parse_confusion_matrix(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::vector<Count>> rows;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;

  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      nl = text.size();
    }
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;

    // Everything from '#' to the end of the line is a comment.
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    if (line.starts_with("labels:")) {
      if (!rows.empty() || !labels.empty()) {
        fail(ParseErrorKind::LabelMismatch, line_no, 0,
             "labels line must precede the matrix rows");
      }
      for (auto field : split_fields(trim(line.substr(7)))) {
        labels.emplace_back(field);
      }
      continue;
    }

    const auto fields = split_fields(line);
    const std::size_t row = rows.size() + 1;
    if (rows.empty()) {
      width = fields.size();
    } else if (fields.size() != width) {
      fail(ParseErrorKind::NonSquare, row, 0,
           "has " + std::to_string(fields.size()) + " entries, expected " +
               std::to_string(width));
    }
    std::vector<Count> values;
    values.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      values.push_back(parse_count(fields[c], row, c + 1));
    }
    rows.push_back(std::move(values));
  }

  if (rows.empty()) {
    fail(ParseErrorKind::Empty, 0, 0, "no matrix rows found");
  }
  if (rows.size() != width) {
    if (rows.size() < 2 && width < 2) {
      fail(ParseErrorKind::TooFewClasses, 0, 0, "need at least 2 classes");
    }
    fail(ParseErrorKind::NonSquare, rows.size(), 0,
         std::to_string(rows.size()) + " rows of " + std::to_string(width) +
             " entries");
  }
  return ConfusionMatrix::from_rows(rows, std::move(labels));
}

ConfusionMatrix read_confusion_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_confusion_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.row(), e.column(), path + ": " + e.what());
  }
}

std::string render(const ConfusionMatrix& cm) {
  std::string out;
  if (!cm.labels().empty()) {
    out += "labels: ";
    for (std::size_t i = 0; i < cm.labels().size(); ++i) {
      out += (i ? "," : "") + cm.labels()[i];
    }
    out += '\n';
  }
  for (std::size_t r = 0; r < cm.classes(); ++r) {
    for (std::size_t c = 0; c < cm.classes(); ++c) {
      if (c) {
        out += ',';
      }
      out += std::to_string(cm(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace corrmetrics
