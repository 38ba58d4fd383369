#pragma once

// Classical and consecutive pattern containment.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

/// The permutation order-isomorphic to `seq` (distinct entries).
inline Permutation standardize(std::span<const int> seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> word(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]])
      throw Error(ErrorCode::DuplicateValue, "value " + std::to_string(seq[order[r]]) + " repeated");
    word[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(word));
}

inline Permutation standardize(const std::vector<int>& seq) { return standardize(std::span<const int>(seq)); }

/// Positions (0-based) of a subsequence of `w` order-isomorphic to `sigma`,
/// found by backtracking left to right.
inline std::optional<std::vector<int>> find_classical(const Permutation& w, const Permutation& sigma) {
  const int n = w.size();
  const int k = sigma.size();
  if (k > n) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  // Every earlier pattern entry must compare with the candidate the way
  // sigma says.
  auto compatible = [&](int pos) {
    const int j = static_cast<int>(chosen.size());
    const int v = w[static_cast<std::size_t>(pos)];
    for (int i = 0; i < j; ++i) {
      const bool pattern_less = sigma[static_cast<std::size_t>(i)] < sigma[static_cast<std::size_t>(j)];
      const bool word_less = w[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])] < v;
      if (pattern_less != word_less) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int from) -> bool {
    const int j = static_cast<int>(chosen.size());
    if (j == k) return true;
    for (int pos = from; pos <= n - (k - j); ++pos) {
      if (!compatible(pos)) continue;
      chosen.push_back(pos);
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return chosen;
  return std::nullopt;
}

inline bool contains_classical(const Permutation& w, const Permutation& sigma) { return find_classical(w, sigma).has_value(); }

/// Start position of a window of `w` that standardizes to `sigma`.
inline std::optional<int> find_consecutive(const Permutation& w, const Permutation& sigma) {
  const int n = w.size();
  const int k = sigma.size();
  for (int start = 0; start + k <= n; ++start) {
    const std::span<const int> window(w.word().data() + start, static_cast<std::size_t>(k));
    if (standardize(window) == sigma) return start;
  }
  return std::nullopt;
}

inline bool contains_consecutive(const Permutation& w, const Permutation& sigma) { return find_consecutive(w, sigma).has_value(); }

}  // namespace boxball
