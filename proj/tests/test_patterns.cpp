#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "boxball/boxball.hpp"
#include "oracles.hpp"

using namespace boxball;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(std::vector<int>{4, 2, 5, 3}).to_string(), "3142");
  EXPECT_EQ(standardize(std::vector<int>{1, 2, 3}).to_string(), "123");
  EXPECT_EQ(standardize(std::vector<int>{9, 6, 8}).to_string(), "312");
  EXPECT_THROW(standardize(std::vector<int>{3, 3}), Error);
}

TEST(Standardize, MatchesRankOracleAndIsIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> seq(1 + rng() % 8);
    std::iota(seq.begin(), seq.end(), 0);
    for (int& v : seq) v = v * 7 + static_cast<int>(rng() % 7);
    std::shuffle(seq.begin(), seq.end(), rng);
    const auto s = standardize(seq);
    ASSERT_EQ(s.word(), oracle::standardize(seq));
    ASSERT_EQ(standardize(s.word()), s);
  }
}

TEST(Classical, Examples) {
  const auto w = P("314592687");
  const auto hit = find_classical(w, P("1423"));
  ASSERT_TRUE(hit);
  std::vector<int> values;
  for (int pos : *hit) values.push_back(w[static_cast<std::size_t>(pos)]);
  EXPECT_EQ(standardize(values).to_string(), "1423");
  EXPECT_TRUE(contains_classical(w, P("1423")));
  EXPECT_FALSE(contains_classical(w, P("3241")));
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : all_permutations(n)) EXPECT_TRUE(contains_classical(v, P("1")));
}

TEST(Consecutive, Examples) {
  const auto w = P("314592687");
  ASSERT_EQ(find_consecutive(w, P("2413")), std::optional<int>(3));  // 5926
  EXPECT_FALSE(contains_consecutive(w, P("321")));
  EXPECT_TRUE(contains_consecutive(w, w));
}

TEST(Classical, MatchesSubsetOracle) {
  const auto patterns3 = all_permutations(3);
  const auto patterns4 = all_permutations(4);
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      for (const auto& s : patterns3) ASSERT_EQ(contains_classical(w, s), oracle::contains_classical(w.word(), s.word())) << w << " " << s;
      if (n == 7 || n == 5) {
        for (const auto& s : patterns4) ASSERT_EQ(contains_classical(w, s), oracle::contains_classical(w.word(), s.word())) << w << " " << s;
      }
    }
}

TEST(Consecutive, ImpliesClassical) {
  std::vector<Permutation> sigmas;
  for (int k = 1; k <= 4; ++k)
    for (const auto& s : all_permutations(k)) sigmas.push_back(s);
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& s : sigmas)
        if (contains_consecutive(w, s)) {
          ASSERT_TRUE(contains_classical(w, s)) << w << " " << s;
        }
}

TEST(Consecutive, ImpliesClassicalAtEight) {
  std::mt19937 rng(8);
  std::vector<int> word{1, 2, 3, 4, 5, 6, 7, 8};
  for (int i = 0; i < 2000; ++i) {
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation w(word);
    for (const auto& s : all_permutations(4))
      if (contains_consecutive(w, s)) {
        ASSERT_TRUE(contains_classical(w, s));
      }
  }
}

TEST(Goodness, Examples) {
  EXPECT_TRUE(is_good(P("25143")));
  EXPECT_FALSE(is_good(P("2143")));
  EXPECT_FALSE(is_good(P("5623714")));
  EXPECT_TRUE(is_good(P("42513")));
  EXPECT_TRUE(goodness(P("5623714")).consistent());
}

TEST(Goodness, AvoidersOfBothPatternsAreGood) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : all_permutations(n))
      if (!contains_classical(w, P("2143")) && !contains_classical(w, P("3142"))) {
        ASSERT_TRUE(is_good(w)) << w;
      }
}
