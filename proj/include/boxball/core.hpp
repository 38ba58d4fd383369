#pragma once

// Value types shared by every boxball module: permutations, partitions,
// row-increasing tableaux, box-ball configurations and configuration arrays.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boxball {

enum class ErrorCode {
  DuplicateValue,
  OutOfRangeValue,
  NotPartitionShape,
  NotStandard,
  ShapeMismatch,
  NotInvolution,
  NotNoncrossing,
  CapExceeded,
  ParseError,
  UnknownSuite,
  IoError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateValue: return "DUPLICATE_VALUE";
    case ErrorCode::OutOfRangeValue: return "OUT_OF_RANGE_VALUE";
    case ErrorCode::NotPartitionShape: return "NOT_PARTITION_SHAPE";
    case ErrorCode::NotStandard: return "NOT_STANDARD";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NotInvolution: return "NOT_INVOLUTION";
    case ErrorCode::NotNoncrossing: return "NOT_NONCROSSING";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownSuite: return "UNKNOWN_SUITE";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline std::string join(const std::vector<int>& values, std::string_view sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace detail

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Validates that `word` is a bijection on {1..word.size()}.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw Error(ErrorCode::OutOfRangeValue, "permutation must be nonempty");
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
      if (v < 1 || v > n)
        throw Error(ErrorCode::OutOfRangeValue,
                    "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw Error(ErrorCode::DuplicateValue, "value " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }

  /// 0-based position access.
  int operator[](std::size_t i) const { return word_[i]; }

  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  /// Positions (0-based) indexed by value: inverse()[v] for v in 1..n.
  std::vector<int> positions() const {
    std::vector<int> pos(word_.size() + 1, -1);
    for (std::size_t i = 0; i < word_.size(); ++i) pos[static_cast<std::size_t>(word_[i])] = static_cast<int>(i);
    return pos;
  }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  Permutation reversed() const { return Permutation(std::vector<int>(word_.rbegin(), word_.rend())); }

  /// Digit string for n <= 9 ("452361"), comma-separated otherwise.
  std::string to_string() const {
    if (size() <= 9) {
      std::string s;
      for (int v : word_) s.push_back(static_cast<char>('0' + v));
      return s;
    }
    return detail::join(word_, ",");
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

/// Accepts "452361" (n <= 9) or "4,5,2,3,6,1".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error(ErrorCode::ParseError, "bad permutation digit in '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      const std::string token(text.substr(start, comma - start));
      if (token.empty()) throw Error(ErrorCode::ParseError, "empty entry in '" + std::string(text) + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad entry '" + token + "'");
      }
      if (used != token.size()) throw Error(ErrorCode::ParseError, "bad entry '" + token + "'");
      word.push_back(v);
      start = comma + 1;
    }
  }
  if (word.empty()) throw Error(ErrorCode::ParseError, "empty permutation");
  return Permutation(std::move(word));
}

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw Error(ErrorCode::NotPartitionShape, "parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error(ErrorCode::NotPartitionShape, "parts must weakly decrease");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Column lengths.
  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      for (int c = 0; c < parts_[0]; ++c) {
        int len = 0;
        for (int p : parts_)
          if (p > c) ++len;
        cols.push_back(len);
      }
    }
    return Partition(std::move(cols));
  }

  /// (a, 1, 1, ..., 1): every part after the first is 1.
  bool is_hook() const {
    return std::all_of(parts_.begin() + std::min<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(parts_.size())), parts_.end(),
                       [](int p) { return p == 1; });
  }

  std::string to_string() const { return "(" + detail::join(parts_, ",") + ")"; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// All partitions of n in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Left-justified rows of positive integers, each row strictly increasing.
/// Columns need not increase and row lengths need not decrease; see
/// is_standard() and shape().
class Tableau {
 public:
  using Row = std::vector<int>;

  Tableau() = default;

  explicit Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (const Row& row : rows_) {
      if (row.empty()) throw Error(ErrorCode::NotPartitionShape, "tableau rows must be nonempty");
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < 1) throw Error(ErrorCode::OutOfRangeValue, "tableau entries must be positive");
        if (j > 0 && row[j] <= row[j - 1])
          throw Error(ErrorCode::NotStandard, "tableau rows must strictly increase");
      }
    }
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  /// Number of cells.
  int size() const noexcept {
    int s = 0;
    for (const Row& r : rows_) s += static_cast<int>(r.size());
    return s;
  }

  std::vector<int> row_lengths() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const Row& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return lens;
  }

  /// Length of column 0 (= row count).
  int first_column_length() const noexcept { return static_cast<int>(rows_.size()); }
  int first_row_length() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

  Partition shape() const {
    std::vector<int> lens = row_lengths();
    for (std::size_t i = 1; i < lens.size(); ++i)
      if (lens[i] > lens[i - 1])
        throw Error(ErrorCode::NotPartitionShape, "row " + std::to_string(i + 1) + " is longer than the row above");
    return Partition(std::move(lens));
  }

  bool has_partition_shape() const noexcept {
    for (std::size_t i = 1; i < rows_.size(); ++i)
      if (rows_[i].size() > rows_[i - 1].size()) return false;
    return true;
  }

  /// Rows and columns increase, row lengths weakly decrease, entries are {1..n}.
  bool is_standard() const {
    if (rows_.empty() || !has_partition_shape()) return false;
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        const int v = rows_[i][j];
        if (v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        if (i > 0 && rows_[i - 1][j] >= v) return false;
      }
    }
    return true;
  }

  /// Row and column (0-based) holding `value`, if present.
  std::optional<std::pair<std::size_t, std::size_t>> find(int value) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[i][j] == value) return std::pair{i, j};
    return std::nullopt;
  }

  /// "136/25/4" for single-digit entries, "1,3,6/2,5/4" otherwise.
  std::string to_string() const {
    bool small = true;
    for (const Row& r : rows_)
      for (int v : r) small = small && v <= 9;
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += '/';
      s += small ? detail::join(rows_[i], "") : detail::join(rows_[i], ",");
    }
    return s;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Row> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

/// A finite set of labelled balls 1..n in a strip of boxes indexed by Z.
/// The stored window always starts and ends with a ball; every box outside
/// it is empty. Empty boxes compare as n+1.
class BbsConfiguration {
 public:
  using Box = std::int64_t;
  static constexpr int kEmpty = 0;

  BbsConfiguration() = default;

  /// `cells[i]` is the content of box `offset + i`; kEmpty marks an empty box.
  /// Leading and trailing empties are trimmed.
  BbsConfiguration(Box offset, std::vector<int> cells) : offset_(offset), cells_(std::move(cells)) {
    std::size_t first = 0;
    while (first < cells_.size() && cells_[first] == kEmpty) ++first;
    std::size_t last = cells_.size();
    while (last > first && cells_[last - 1] == kEmpty) --last;
    if (first == last) throw Error(ErrorCode::OutOfRangeValue, "configuration must contain at least one ball");
    cells_ = std::vector<int>(cells_.begin() + static_cast<std::ptrdiff_t>(first), cells_.begin() + static_cast<std::ptrdiff_t>(last));
    offset_ += static_cast<Box>(first);

    int n = 0;
    for (int v : cells_)
      if (v != kEmpty) ++n;
    n_ = n;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : cells_) {
      if (v == kEmpty) continue;
      if (v < 1 || v > n)
        throw Error(ErrorCode::OutOfRangeValue, "ball " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw Error(ErrorCode::DuplicateValue, "ball " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static BbsConfiguration from_optional_cells(Box offset, const std::vector<std::optional<int>>& cells) {
    std::vector<int> raw;
    raw.reserve(cells.size());
    for (const auto& c : cells) {
      if (c && *c == kEmpty) throw Error(ErrorCode::OutOfRangeValue, "ball label 0 is not allowed");
      raw.push_back(c ? *c : kEmpty);
    }
    return BbsConfiguration(offset, std::move(raw));
  }

  /// Box index of the leftmost ball.
  Box offset() const noexcept { return offset_; }
  Box first_box() const noexcept { return offset_; }
  Box last_box() const noexcept { return offset_ + static_cast<Box>(cells_.size()) - 1; }
  int ball_count() const noexcept { return n_; }
  int empty_value() const noexcept { return n_ + 1; }

  /// Raw window, kEmpty for empty boxes.
  const std::vector<int>& cells() const noexcept { return cells_; }

  bool is_ball(Box box) const noexcept {
    return box >= offset_ && box <= last_box() && cells_[static_cast<std::size_t>(box - offset_)] != kEmpty;
  }

  /// Content of `box` with empty boxes reported as n+1.
  int value(Box box) const noexcept {
    if (box < offset_ || box > last_box()) return empty_value();
    const int v = cells_[static_cast<std::size_t>(box - offset_)];
    return v == kEmpty ? empty_value() : v;
  }

  /// Box holding each ball, indexed by label (index 0 unused).
  std::vector<Box> ball_positions() const {
    std::vector<Box> pos(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] != kEmpty) pos[static_cast<std::size_t>(cells_[i])] = offset_ + static_cast<Box>(i);
    return pos;
  }

  /// Sorted boxes holding balls.
  std::vector<Box> occupied_boxes() const {
    std::vector<Box> boxes;
    boxes.reserve(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] != kEmpty) boxes.push_back(offset_ + static_cast<Box>(i));
    return boxes;
  }

  /// Balls in left-to-right order, empties dropped.
  std::vector<int> balls_in_order() const {
    std::vector<int> balls;
    balls.reserve(static_cast<std::size_t>(n_));
    for (int v : cells_)
      if (v != kEmpty) balls.push_back(v);
    return balls;
  }

  /// Space-separated labels with '.' for empty boxes, covering boxes
  /// from `from_box` (clamped to the first ball) through the last ball.
  std::string render(std::optional<Box> from_box = std::nullopt) const {
    const Box start = from_box ? std::min(*from_box, offset_) : offset_;
    std::string s;
    for (Box b = start; b <= last_box(); ++b) {
      if (b != start) s += ' ';
      const int v = is_ball(b) ? cells_[static_cast<std::size_t>(b - offset_)] : kEmpty;
      s += v == kEmpty ? std::string(".") : std::to_string(v);
    }
    return s;
  }

  /// Compact "ee45e2136" form starting at `from_box`; requires n <= 9.
  std::string compact(std::optional<Box> from_box = std::nullopt) const {
    const Box start = from_box ? std::min(*from_box, offset_) : offset_;
    std::string s;
    for (Box b = start; b <= last_box(); ++b) {
      const int v = is_ball(b) ? cells_[static_cast<std::size_t>(b - offset_)] : kEmpty;
      s += v == kEmpty ? std::string("e") : std::to_string(v);
    }
    return s;
  }

  friend bool operator==(const BbsConfiguration&, const BbsConfiguration&) = default;
  friend auto operator<=>(const BbsConfiguration&, const BbsConfiguration&) = default;

 private:
  Box offset_ = 1;
  std::vector<int> cells_;
  int n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const BbsConfiguration& x) {
  return os << "[" << x.offset() << "] " << x.render();
}

/// Parses the compact form "ee45e2136" ('e' or '.' for an empty box, one
/// digit per ball) with the first character at box `first_box`.
inline BbsConfiguration parse_compact_configuration(std::string_view text, BbsConfiguration::Box first_box = 1) {
  std::vector<int> cells;
  for (char c : text) {
    if (c == 'e' || c == '.')
      cells.push_back(BbsConfiguration::kEmpty);
    else if (c >= '1' && c <= '9')
      cells.push_back(c - '0');
    else
      throw Error(ErrorCode::ParseError, "bad configuration character '" + std::string(1, c) + "'");
  }
  return BbsConfiguration(first_box, std::move(cells));
}

/// Increasing runs laid out as a (possibly disconnected) skew filling.
/// Row 0 is the rightmost run. `shift` is the starting column of the row;
/// the smallest shift is 0.
struct ConfigurationArray {
  struct Row {
    int shift = 0;
    std::vector<int> entries;

    friend bool operator==(const Row&, const Row&) = default;
  };

  std::vector<Row> rows;

  std::vector<int> row_lengths() const {
    std::vector<int> lens;
    for (const Row& r : rows) lens.push_back(static_cast<int>(r.entries.size()));
    return lens;
  }

  /// Entries only, shifts dropped (the increasing run decomposition).
  Tableau entries() const {
    std::vector<Tableau::Row> out;
    for (const Row& r : rows) out.push_back(r.entries);
    return Tableau(std::move(out));
  }

  /// Shifts and row lengths; two arrays with equal layouts have identical shape.
  std::vector<std::pair<int, int>> layout() const {
    std::vector<std::pair<int, int>> out;
    for (const Row& r : rows) out.emplace_back(r.shift, static_cast<int>(r.entries.size()));
    return out;
  }

  friend bool operator==(const ConfigurationArray&, const ConfigurationArray&) = default;
};

}  // namespace boxball
