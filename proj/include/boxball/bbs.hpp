#pragma once

// Box-ball dynamics: the ball-by-ball move, the carrier sweep, increasing
// runs, configuration arrays, steady-state detection and the localized
// Schensted statistics.

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

/// Balls w_1..w_n in boxes 1..n.
inline BbsConfiguration from_permutation(const Permutation& w) { return BbsConfiguration(1, w.word()); }

namespace detail {

/// Runs one ball-by-ball move, calling `after_jump(k, cells, offset)` once
/// ball k has landed. Returns the untrimmed window.
template <class AfterJump>
std::vector<int> jump_balls(const BbsConfiguration& x, AfterJump&& after_jump) {
  const int n = x.ball_count();
  std::vector<int> cells = x.cells();
  cells.resize(cells.size() + static_cast<std::size_t>(n) + 1, BbsConfiguration::kEmpty);

  std::vector<std::size_t> pos(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] != BbsConfiguration::kEmpty) pos[static_cast<std::size_t>(cells[i])] = i;

  for (int ball = 1; ball <= n; ++ball) {
    const std::size_t from = pos[static_cast<std::size_t>(ball)];
    std::size_t to = from + 1;
    while (cells[to] != BbsConfiguration::kEmpty) ++to;
    cells[from] = BbsConfiguration::kEmpty;
    cells[to] = ball;
    pos[static_cast<std::size_t>(ball)] = to;
    after_jump(ball, cells);
  }
  return cells;
}

}  // namespace detail

/// One box-ball move: balls jump in increasing label order to the nearest
/// empty box on their right.
inline BbsConfiguration bbs_move(const BbsConfiguration& x) {
  auto cells = detail::jump_balls(x, [](int, const std::vector<int>&) {});
  return BbsConfiguration(x.offset(), std::move(cells));
}

/// The configuration after each individual jump of one move: element k is
/// the state once balls 1..k have jumped (element 0 is `x` itself, element
/// n equals bbs_move(x)).
inline std::vector<BbsConfiguration> bbs_move_snapshots(const BbsConfiguration& x) {
  std::vector<BbsConfiguration> snaps;
  snaps.reserve(static_cast<std::size_t>(x.ball_count()) + 1);
  snaps.push_back(x);
  detail::jump_balls(x, [&](int, const std::vector<int>& cells) { snaps.emplace_back(x.offset(), cells); });
  return snaps;
}

/// One move computed by sweeping an n-slot carrier left to right. At each
/// box the carrier takes in the box content and emits the smallest carried
/// value greater than it, or its minimum when there is none.
inline BbsConfiguration carrier_move(const BbsConfiguration& x) {
  const int n = x.ball_count();
  const int empty = x.empty_value();
  std::multiset<int> carrier;
  for (int i = 0; i < n; ++i) carrier.insert(empty);

  std::vector<int> out;
  BbsConfiguration::Box box = x.first_box();
  auto carrying_balls = [&] { return *carrier.begin() != empty; };
  while (box <= x.last_box() || carrying_balls()) {
    const int incoming = x.value(box);
    int emitted = 0;
    if (incoming < *carrier.rbegin()) {
      auto it = carrier.upper_bound(incoming);
      emitted = *it;
      carrier.erase(it);
    } else {
      emitted = *carrier.begin();
      carrier.erase(carrier.begin());
    }
    carrier.insert(incoming);
    out.push_back(emitted == empty ? BbsConfiguration::kEmpty : emitted);
    ++box;
  }
  return BbsConfiguration(x.first_box(), std::move(out));
}

/// t-fold bbs_move.
inline BbsConfiguration evolve(BbsConfiguration x, int t) {
  for (int i = 0; i < t; ++i) x = bbs_move(x);
  return x;
}

/// A maximal increasing run of contiguous balls.
struct IncreasingRun {
  BbsConfiguration::Box first_box = 0;
  std::vector<int> balls;

  BbsConfiguration::Box last_box() const { return first_box + static_cast<BbsConfiguration::Box>(balls.size()) - 1; }
  friend bool operator==(const IncreasingRun&, const IncreasingRun&) = default;
};

/// Runs in left-to-right order.
inline std::vector<IncreasingRun> increasing_runs(const BbsConfiguration& x) {
  std::vector<IncreasingRun> runs;
  const auto& cells = x.cells();
  bool open = false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int v = cells[i];
    if (v == BbsConfiguration::kEmpty) {
      open = false;
      continue;
    }
    if (!open || runs.back().balls.back() > v) {
      runs.push_back({x.offset() + static_cast<BbsConfiguration::Box>(i), {}});
      open = true;
    }
    runs.back().balls.push_back(v);
  }
  return runs;
}

/// Configuration array of `x`: rightmost run on top; g empty boxes between
/// two runs shift the lower row g columns further left.
inline ConfigurationArray configuration_array(const BbsConfiguration& x) {
  const auto runs = increasing_runs(x);
  ConfigurationArray ca;
  ca.rows.reserve(runs.size());
  int shift = 0;
  int min_shift = 0;
  for (std::size_t r = runs.size(); r-- > 0;) {
    if (r + 1 < runs.size()) {
      const auto gap = runs[r + 1].first_box - runs[r].last_box() - 1;
      shift -= static_cast<int>(gap);
    }
    min_shift = std::min(min_shift, shift);
    ca.rows.push_back({shift, runs[r].balls});
  }
  for (auto& row : ca.rows) row.shift -= min_shift;
  return ca;
}

/// The increasing run decomposition: configuration array with every shift 0.
inline ConfigurationArray increasing_run_decomposition(const BbsConfiguration& x) {
  ConfigurationArray ca;
  const auto runs = increasing_runs(x);
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) ca.rows.push_back({0, it->balls});
  return ca;
}

namespace detail {

inline bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

inline bool same_entries(const ConfigurationArray& a, const ConfigurationArray& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i].entries != b.rows[i].entries) return false;
  return true;
}

}  // namespace detail

/// True iff the configuration array is a standard skew filling with weakly
/// decreasing row lengths.
inline bool is_steady_state(const BbsConfiguration& x) {
  const auto ca = configuration_array(x);
  if (!detail::weakly_decreasing(ca.row_lengths())) return false;
  for (std::size_t i = 0; i + 1 < ca.rows.size(); ++i) {
    const auto& upper = ca.rows[i];
    const auto& lower = ca.rows[i + 1];
    const int from = std::max(upper.shift, lower.shift);
    const int to = std::min(upper.shift + static_cast<int>(upper.entries.size()),
                            lower.shift + static_cast<int>(lower.entries.size()));
    for (int c = from; c < to; ++c)
      if (upper.entries[static_cast<std::size_t>(c - upper.shift)] >= lower.entries[static_cast<std::size_t>(c - lower.shift)])
        return false;
  }
  return true;
}

/// Second steady-state detector: the increasing run decomposition has weakly
/// decreasing rows and is unchanged by one move.
inline bool is_steady_state_via_id(const BbsConfiguration& x) {
  const auto id = increasing_run_decomposition(x);
  if (!detail::weakly_decreasing(id.row_lengths())) return false;
  return detail::same_entries(increasing_run_decomposition(bbs_move(x)), id);
}

inline int default_cap(int n) { return 2 * n; }

struct SteadyState {
  int time = 0;
  BbsConfiguration configuration;
};

/// First steady configuration reached from `x` within `cap` moves.
inline SteadyState reach_steady_state(BbsConfiguration x, int cap) {
  for (int t = 0; t <= cap; ++t) {
    if (is_steady_state(x)) return {t, std::move(x)};
    if (t < cap) x = bbs_move(x);
  }
  throw Error(ErrorCode::CapExceeded, "no steady state within " + std::to_string(cap) + " moves");
}

inline int steady_state_time(const Permutation& w, int cap) { return reach_steady_state(from_permutation(w), cap).time; }
inline int steady_state_time(const Permutation& w) { return steady_state_time(w, default_cap(w.size())); }

/// Row i is the i-th rightmost soliton.
struct SolitonDecomposition {
  Tableau tableau;
  Permutation source;
};

inline SolitonDecomposition soliton_decomposition(const Permutation& w, int cap) {
  const auto steady = reach_steady_state(from_permutation(w), cap);
  return {increasing_run_decomposition(steady.configuration).entries(), w};
}

inline SolitonDecomposition soliton_decomposition(const Permutation& w) {
  return soliton_decomposition(w, default_cap(w.size()));
}

/// Number of balls in `u` minus the empty boxes between its first and last
/// ball. `u` must be an increasing sequence of balls appearing left to right.
inline int penalized_length(const BbsConfiguration& x, const std::vector<int>& u) {
  if (u.empty()) return 0;
  const auto pos = x.ball_positions();
  for (int b : u)
    if (b < 1 || b > x.ball_count()) throw Error(ErrorCode::OutOfRangeValue, "no ball " + std::to_string(b));
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] <= u[i - 1] || pos[static_cast<std::size_t>(u[i])] <= pos[static_cast<std::size_t>(u[i - 1])])
      throw Error(ErrorCode::OutOfRangeValue, "not an increasing subsequence of balls");
  const auto first = pos[static_cast<std::size_t>(u.front())];
  const auto last = pos[static_cast<std::size_t>(u.back())];
  int empties = 0;
  for (auto b = first + 1; b < last; ++b)
    if (!x.is_ball(b)) ++empties;
  return static_cast<int>(u.size()) - empties;
}

/// Maximum penalized length over increasing ball subsequences, by an
/// O(m^2) dynamic program over balls in box order.
inline int local_incr(const BbsConfiguration& x) {
  const auto boxes = x.occupied_boxes();
  const auto balls = x.balls_in_order();
  const std::size_t m = balls.size();
  std::vector<int> best(m, 1);
  int answer = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (balls[i] >= balls[j]) continue;
      const auto empties = (boxes[j] - boxes[i] - 1) - static_cast<BbsConfiguration::Box>(j - i - 1);
      best[j] = std::max(best[j], best[i] + 1 - static_cast<int>(empties));
    }
    answer = std::max(answer, best[j]);
  }
  return answer;
}

/// Descents of the whole configuration with empty = n+1, including the one
/// just left of the leftmost ball.
inline int local_decr(const BbsConfiguration& x) {
  int descents = 0;
  for (auto b = x.first_box() - 1; b < x.last_box(); ++b)
    if (x.value(b) > x.value(b + 1)) ++descents;
  return descents;
}

}  // namespace boxball
