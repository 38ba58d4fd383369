#pragma once

// Robinson-Schensted insertion and its inverse, reading words,
// column superstandard tableaux, standard tableau enumeration and the
// classical subsequence statistics.

#include <algorithm>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

struct RsPair {
  Tableau p;  ///< insertion tableau
  Tableau q;  ///< recording tableau

  friend bool operator==(const RsPair&, const RsPair&) = default;
};

/// Row insertion of w_1..w_n; q records where each step's new cell appeared.
inline RsPair rs_insert(const Permutation& w) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  int step = 0;
  for (int value : w) {
    ++step;
    int carry = value;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({carry});
        q.push_back({step});
        break;
      }
      auto& r = p[row];
      auto it = std::upper_bound(r.begin(), r.end(), carry);
      if (it == r.end()) {
        r.push_back(carry);
        q[row].push_back(step);
        break;
      }
      std::swap(*it, carry);
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

inline Tableau insertion_tableau(const Permutation& w) { return rs_insert(w).p; }
inline Tableau recording_tableau(const Permutation& w) { return rs_insert(w).q; }

/// The unique permutation with rs_insert(w) == (p, q).
inline Permutation inverse_rs(const Tableau& p, const Tableau& q) {
  if (!p.is_standard() || !q.is_standard()) throw Error(ErrorCode::NotStandard, "inverse_rs needs standard tableaux");
  if (p.row_lengths() != q.row_lengths()) throw Error(ErrorCode::ShapeMismatch, "P and Q differ in shape");

  const int n = p.size();
  auto rows = p.rows();
  std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < q.row_count(); ++i)
    for (int v : q.row(i)) row_of[static_cast<std::size_t>(v)] = i;

  std::vector<int> word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    std::size_t row = row_of[static_cast<std::size_t>(step)];
    int carry = rows[row].back();
    rows[row].pop_back();
    if (rows[row].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(row));
    while (row-- > 0) {
      auto& r = rows[row];
      // largest entry smaller than carry is bumped out upward
      auto it = std::lower_bound(r.begin(), r.end(), carry);
      --it;
      std::swap(*it, carry);
    }
    word[static_cast<std::size_t>(step - 1)] = carry;
  }
  return Permutation(std::move(word));
}

/// Rows concatenated bottom to top.
inline Permutation row_reading_word(const Tableau& t) {
  if (!t.is_standard()) throw Error(ErrorCode::NotStandard, "row reading word needs a standard tableau");
  std::vector<int> word;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return Permutation(std::move(word));
}

/// Columns read bottom to top, left to right.
inline Permutation column_reading_word(const Tableau& t) {
  if (!t.is_standard()) throw Error(ErrorCode::NotStandard, "column reading word needs a standard tableau");
  std::vector<int> word;
  const auto cols = t.shape().conjugate();
  for (int c = 0; c < cols.length(); ++c)
    for (int r = cols[static_cast<std::size_t>(c)]; r-- > 0;) word.push_back(t.row(static_cast<std::size_t>(r))[static_cast<std::size_t>(c)]);
  return Permutation(std::move(word));
}

/// Columns filled top to bottom, left to right with 1, 2, 3, ...
inline Tableau column_superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  const auto cols = shape.conjugate();
  int next = 1;
  for (int c = 0; c < cols.length(); ++c)
    for (int r = 0; r < cols[static_cast<std::size_t>(c)]; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next++;
  return Tableau(std::move(rows));
}

/// Rows filled left to right, top to bottom.
inline Tableau row_superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> row;
    for (int j = 0; j < len; ++j) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

/// All standard tableaux of the given shape, in a fixed order.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t len = rows[r].size();
      if (static_cast<int>(len) == shape[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(next);
      self(self, next + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// All standard tableaux of size n, grouped by shape in partitions_of order.
inline std::vector<Tableau> standard_tableaux(int n) {
  std::vector<Tableau> out;
  for (const auto& shape : partitions_of(n)) {
    auto part = standard_tableaux(shape);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// Longest increasing subsequence (patience sorting).
inline int incr(const Permutation& w) {
  std::vector<int> tails;
  for (int v : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

/// Longest decreasing subsequence.
inline int decr(const Permutation& w) { return incr(w.reversed()); }

/// Number of positions i with w_i > w_{i+1}.
inline int des(const Permutation& w) {
  int d = 0;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) ++d;
  return d;
}

}  // namespace boxball
