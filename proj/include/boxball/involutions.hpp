#pragma once

// Involution cycle structure: crossings, nestings, the noncrossing
// soliton shape and the involution attached to a column superstandard
// tableau.

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

struct InvolutionProfile {
  std::vector<std::pair<int, int>> two_cycles;  ///< (a, b), a < b, sorted by a
  std::vector<int> fixed_points;
  int n = 0;

  int k() const noexcept { return static_cast<int>(two_cycles.size()); }
  /// 2-cycles of the form (a, a+1).
  int c() const noexcept {
    return static_cast<int>(std::count_if(two_cycles.begin(), two_cycles.end(), [](const auto& p) { return p.second == p.first + 1; }));
  }

  friend bool operator==(const InvolutionProfile&, const InvolutionProfile&) = default;
};

inline bool is_involution(const Permutation& w) {
  for (int i = 0; i < w.size(); ++i)
    if (w[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] != i + 1) return false;
  return true;
}

inline InvolutionProfile involution_profile(const Permutation& w) {
  if (!is_involution(w)) throw Error(ErrorCode::NotInvolution, w.to_string() + " is not an involution");
  InvolutionProfile prof;
  prof.n = w.size();
  for (int a = 1; a <= w.size(); ++a) {
    const int b = w[static_cast<std::size_t>(a - 1)];
    if (b == a)
      prof.fixed_points.push_back(a);
    else if (a < b)
      prof.two_cycles.emplace_back(a, b);
  }
  return prof;
}

/// No two 2-cycles (a c), (b d) with a < b < c < d.
inline bool is_noncrossing(const Permutation& w) {
  const auto cycles = involution_profile(w).two_cycles;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto [a, c] = cycles[i];
      const auto [b, d] = cycles[j];
      if (a < b && b < c && c < d) return false;
    }
  return true;
}

/// Every two 2-cycles are (a d), (b c) with a < b < c < d.
inline bool is_nested(const Permutation& w) {
  const auto cycles = involution_profile(w).two_cycles;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto [a, d] = cycles[i];
      const auto [b, c] = cycles[j];
      if (!(a < b && c < d)) return false;
    }
  return true;
}

/// (n-2k+c, 1, ..., 1) with 2k-c trailing ones, for a noncrossing
/// involution with k 2-cycles of which c are adjacent.
inline Partition noncrossing_shape(const Permutation& w) {
  if (!is_noncrossing(w)) throw Error(ErrorCode::NotNoncrossing, w.to_string() + " has a crossing");
  const auto prof = involution_profile(w);
  const int k = prof.k();
  const int c = prof.c();
  std::vector<int> parts{prof.n - 2 * k + c};
  parts.insert(parts.end(), static_cast<std::size_t>(2 * k - c), 1);
  return Partition(std::move(parts));
}

/// Folds each column of the column superstandard tableau of `shape` in
/// the middle: the column holding a..b contributes (a b)(a+1 b-1)...
inline Permutation superstandard_involution(const Partition& shape) {
  const int n = shape.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  const auto cols = shape.conjugate();
  int start = 1;
  for (int len : cols.parts()) {
    const int end = start + len - 1;
    for (int i = 0; i < len; ++i) word[static_cast<std::size_t>(start + i - 1)] = end - i;
    start = end + 1;
  }
  return Permutation(std::move(word));
}

/// "(26)(34)(78)" for n <= 9, "(2,6)(3,4)" for larger labels; fixed
/// points are omitted. The identity prints as "()".
inline std::string format_cycles(const Permutation& w) {
  const auto prof = involution_profile(w);
  if (prof.two_cycles.empty()) return "()";
  std::string s;
  const bool compact = w.size() <= 9;
  for (const auto& [a, b] : prof.two_cycles)
    s += "(" + std::to_string(a) + (compact ? "" : ",") + std::to_string(b) + ")";
  return s;
}

/// Parses disjoint cycle notation of an involution on {1..n}; fixed points
/// may be omitted or written as 1-cycles. Single-digit labels may be run
/// together ("(26)(34)"); otherwise separate them with commas.
inline Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'"); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) fail("missing ')'");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> labels;
    if (body.find(',') != std::string_view::npos) {
      std::size_t s = 0;
      while (s <= body.size()) {
        const auto comma = std::min(body.find(',', s), body.size());
        const std::string tok(body.substr(s, comma - s));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) fail("bad label");
        labels.push_back(std::stoi(tok));
        s = comma + 1;
      }
    } else {
      for (char c : body) {
        if (c < '0' || c > '9') fail("bad label");
        labels.push_back(c - '0');
      }
    }
    if (labels.size() > 2) fail("cycle longer than 2");
    for (int v : labels) {
      if (v < 1 || v > n) fail("label out of range");
      if (used[static_cast<std::size_t>(v)]) fail("label repeated");
      used[static_cast<std::size_t>(v)] = true;
    }
    if (labels.size() == 2) {
      word[static_cast<std::size_t>(labels[0] - 1)] = labels[1];
      word[static_cast<std::size_t>(labels[1] - 1)] = labels[0];
    }
    i = close + 1;
  }
  return Permutation(std::move(word));
}

/// All involutions of S_n in lexicographic order.
inline std::vector<Permutation> involutions(int n) {
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int a) -> void {
    while (a <= n && word[static_cast<std::size_t>(a - 1)] != 0) ++a;
    if (a > n) {
      out.emplace_back(word);
      return;
    }
    word[static_cast<std::size_t>(a - 1)] = a;
    self(self, a + 1);
    for (int b = a + 1; b <= n; ++b) {
      if (word[static_cast<std::size_t>(b - 1)] != 0) continue;
      word[static_cast<std::size_t>(a - 1)] = b;
      word[static_cast<std::size_t>(b - 1)] = a;
      self(self, a + 1);
      word[static_cast<std::size_t>(b - 1)] = 0;
    }
    word[static_cast<std::size_t>(a - 1)] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace boxball
