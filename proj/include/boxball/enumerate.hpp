#pragma once

// Lexicographic enumeration of S_n split into contiguous index ranges so
// that results come back in the same order for any worker count.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "boxball/core.hpp"

namespace boxball {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// The permutation of rank `index` (0-based) in lexicographic order.
inline std::vector<int> unrank_lex(int n, std::uint64_t index) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    word.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return word;
}

/// Lexicographic rank of a permutation word.
inline std::uint64_t rank_lex(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)]) ++smaller_later;
    rank += static_cast<std::uint64_t>(smaller_later) * factorial(n - 1 - i);
  }
  return rank;
}

/// Runs `body(begin, end)` over [0, count) split into `jobs` contiguous
/// ranges on separate threads. The first exception thrown is rethrown.
template <class Body>
void parallel_ranges(std::uint64_t count, int jobs, Body&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    body(std::uint64_t{0}, count);
    return;
  }
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (std::uint64_t t = 0; t < workers; ++t) {
    const std::uint64_t begin = count * t / workers;
    const std::uint64_t end = count * (t + 1) / workers;
    threads.emplace_back([&, t, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// fn(w) for every w in S_n, results in lexicographic order of w.
template <class Fn>
auto map_permutations(int n, int jobs, Fn&& fn) {
  using Record = decltype(fn(std::declval<const Permutation&>()));
  const std::uint64_t count = factorial(n);
  std::vector<Record> out(static_cast<std::size_t>(count));
  parallel_ranges(count, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    if (begin == end) return;
    std::vector<int> word = unrank_lex(n, begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      out[static_cast<std::size_t>(i)] = fn(Permutation(word));
      std::next_permutation(word.begin(), word.end());
    }
  });
  return out;
}

/// fn(item) for every element, results in input order.
template <class Item, class Fn>
auto map_items(const std::vector<Item>& items, int jobs, Fn&& fn) {
  using Record = decltype(fn(std::declval<const Item&>()));
  std::vector<Record> out(items.size());
  parallel_ranges(items.size(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) out[static_cast<std::size_t>(i)] = fn(items[static_cast<std::size_t>(i)]);
  });
  return out;
}

/// Every element of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace boxball
