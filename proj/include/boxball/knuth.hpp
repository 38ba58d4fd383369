#pragma once

// Dual Knuth relations on permutations and box-ball configurations,
// dual Knuth classes, Bender-Knuth involutions and the chain of recording
// tableaux whose steady-state times run from 0 to n-3.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "boxball/core.hpp"
#include "boxball/rs.hpp"

namespace boxball {

enum class DualKnuthKind { First, Second };

inline const char* to_string(DualKnuthKind kind) { return kind == DualKnuthKind::First ? "FIRST" : "SECOND"; }

/// FIRST swaps k+1 and k+2 while k sits between them; SECOND swaps k and
/// k+1 while k+2 sits between them.
struct DualKnuthStep {
  DualKnuthKind kind = DualKnuthKind::First;
  int k = 1;

  /// The exchanged values, smaller first.
  std::pair<int, int> swapped() const { return kind == DualKnuthKind::First ? std::pair{k + 1, k + 2} : std::pair{k, k + 1}; }
  /// The value that must lie between the exchanged pair.
  int witness() const { return kind == DualKnuthKind::First ? k : k + 2; }

  friend bool operator==(const DualKnuthStep&, const DualKnuthStep&) = default;
  friend auto operator<=>(const DualKnuthStep&, const DualKnuthStep&) = default;
};

namespace detail {

template <class Position>
bool strictly_between(Position p, Position a, Position b) {
  return (a < p && p < b) || (b < p && p < a);
}

inline Permutation swap_values(const Permutation& w, int a, int b) {
  std::vector<int> word = w.word();
  for (int& v : word) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return Permutation(std::move(word));
}

}  // namespace detail

/// Every permutation one dual Knuth move away from `w`, with the move used.
inline std::vector<std::pair<Permutation, DualKnuthStep>> dual_knuth_neighbors(const Permutation& w) {
  std::vector<std::pair<Permutation, DualKnuthStep>> out;
  const auto pos = w.positions();
  const int n = w.size();
  for (int k = 1; k + 2 <= n; ++k) {
    const auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
    if (detail::strictly_between(at(k), at(k + 1), at(k + 2)))
      out.emplace_back(detail::swap_values(w, k + 1, k + 2), DualKnuthStep{DualKnuthKind::First, k});
    if (detail::strictly_between(at(k + 2), at(k), at(k + 1)))
      out.emplace_back(detail::swap_values(w, k, k + 1), DualKnuthStep{DualKnuthKind::Second, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure of {w} under dual Knuth moves (breadth-first).
inline std::set<Permutation> dual_knuth_class(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::deque<Permutation> frontier{w};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (auto& [next, step] : dual_knuth_neighbors(current))
      if (seen.insert(next).second) frontier.push_back(next);
  }
  return seen;
}

/// All configuration-level dual Knuth moves turning `x` into `y`: the two
/// configurations must agree except for two swapped balls a, a+1, with the
/// required third ball between them. Empty when unrelated.
inline std::vector<DualKnuthStep> config_dual_knuth_steps(const BbsConfiguration& x, const BbsConfiguration& y) {
  std::vector<DualKnuthStep> steps;
  if (x.ball_count() != y.ball_count() || x.offset() != y.offset() || x.cells().size() != y.cells().size()) return steps;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < x.cells().size(); ++i)
    if (x.cells()[i] != y.cells()[i]) diff.push_back(i);
  if (diff.size() != 2) return steps;
  const int u = x.cells()[diff[0]];
  const int v = x.cells()[diff[1]];
  if (u == BbsConfiguration::kEmpty || v == BbsConfiguration::kEmpty) return steps;
  if (y.cells()[diff[0]] != v || y.cells()[diff[1]] != u) return steps;
  const int a = std::min(u, v);
  if (std::max(u, v) != a + 1) return steps;

  const auto pos = x.ball_positions();
  const auto lo = x.offset() + static_cast<BbsConfiguration::Box>(diff[0]);
  const auto hi = x.offset() + static_cast<BbsConfiguration::Box>(diff[1]);
  if (a - 1 >= 1 && detail::strictly_between(pos[static_cast<std::size_t>(a - 1)], lo, hi))
    steps.push_back({DualKnuthKind::First, a - 1});
  if (a + 2 <= x.ball_count() && detail::strictly_between(pos[static_cast<std::size_t>(a + 2)], lo, hi))
    steps.push_back({DualKnuthKind::Second, a});
  return steps;
}

/// The first of config_dual_knuth_steps (FIRST before SECOND when a swap
/// qualifies both ways), or nothing.
inline std::optional<DualKnuthStep> config_dual_knuth_related(const BbsConfiguration& x, const BbsConfiguration& y) {
  auto steps = config_dual_knuth_steps(x, y);
  if (steps.empty()) return std::nullopt;
  return steps.front();
}

/// Configurations one dual Knuth move away from `x`, swapping balls only.
inline std::vector<std::pair<BbsConfiguration, DualKnuthStep>> config_dual_knuth_neighbors(const BbsConfiguration& x) {
  std::vector<std::pair<BbsConfiguration, DualKnuthStep>> out;
  const auto pos = x.ball_positions();
  const int n = x.ball_count();
  auto swapped = [&](int a, int b) {
    std::vector<int> cells = x.cells();
    std::swap(cells[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)] - x.offset())],
              cells[static_cast<std::size_t>(pos[static_cast<std::size_t>(b)] - x.offset())]);
    return BbsConfiguration(x.offset(), std::move(cells));
  };
  for (int k = 1; k + 2 <= n; ++k) {
    const auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
    if (detail::strictly_between(at(k), at(k + 1), at(k + 2)))
      out.emplace_back(swapped(k + 1, k + 2), DualKnuthStep{DualKnuthKind::First, k});
    if (detail::strictly_between(at(k + 2), at(k), at(k + 1)))
      out.emplace_back(swapped(k, k + 1), DualKnuthStep{DualKnuthKind::Second, k});
  }
  return out;
}

/// Swaps i and i+1 when the result is still standard; otherwise returns t.
inline Tableau bender_knuth(const Tableau& t, int i) {
  if (!t.is_standard()) throw Error(ErrorCode::NotStandard, "Bender-Knuth involution needs a standard tableau");
  if (i < 1 || i >= t.size()) throw Error(ErrorCode::OutOfRangeValue, "index " + std::to_string(i) + " outside 1..n-1");
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  for (const auto& row : rows)
    if (!std::is_sorted(row.begin(), row.end())) return t;
  Tableau swapped(std::move(rows));
  return swapped.is_standard() ? swapped : t;
}

/// [[1,3,6,7,...,n],[2,5],[4]], n >= 5.
inline Tableau chain_start(int n) {
  if (n < 5) throw Error(ErrorCode::OutOfRangeValue, "chain needs n >= 5");
  std::vector<int> first{1, 3};
  for (int v = 6; v <= n; ++v) first.push_back(v);
  return Tableau({first, {2, 5}, {4}});
}

/// [[1,2,5,...,n-1],[3,4],[n]], n >= 5: the recording tableau with the
/// largest steady-state time.
inline Tableau q_hat(int n) {
  if (n < 5) throw Error(ErrorCode::OutOfRangeValue, "q_hat needs n >= 5");
  std::vector<int> first{1, 2};
  for (int v = 5; v <= n - 1; ++v) first.push_back(v);
  return Tableau({first, {3, 4}, {n}});
}

struct ChainLink {
  Tableau tableau;
  int expected_sst = 0;
  Permutation involution;  ///< inverse_rs(tableau, tableau)
};

/// chain_start(n), then Bender-Knuth 2, then 4, 5, ..., n-1 applied in turn.
/// Link j is expected to have steady-state time j.
inline std::vector<ChainLink> chain_tableaux(int n) {
  std::vector<ChainLink> chain;
  Tableau t = chain_start(n);
  auto push = [&](const Tableau& tab) {
    chain.push_back({tab, static_cast<int>(chain.size()), inverse_rs(tab, tab)});
  };
  push(t);
  t = bender_knuth(t, 2);
  push(t);
  for (int k = 4; k <= n - 1; ++k) {
    t = bender_knuth(t, k);
    push(t);
  }
  return chain;
}

}  // namespace boxball
