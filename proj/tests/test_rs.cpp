#include <gtest/gtest.h>

#include "boxball/boxball.hpp"
#include "oracles.hpp"

using namespace boxball;

TEST(RsInsert, Examples) {
  const auto a = rs_insert(parse_permutation("5623714"));
  EXPECT_EQ(a.p, Tableau({{1, 3, 4}, {2, 6, 7}, {5}}));
  EXPECT_EQ(a.q, Tableau({{1, 2, 5}, {3, 4, 7}, {6}}));
  const auto b = rs_insert(parse_permutation("63174285"));
  EXPECT_EQ(b.p, Tableau({{1, 2, 5}, {3, 4, 8}, {6, 7}}));
  EXPECT_EQ(b.q, Tableau({{1, 4, 7}, {2, 5, 8}, {3, 6}}));
  EXPECT_EQ(rs_insert(parse_permutation("1")), (RsPair{Tableau(std::vector<Tableau::Row>{{1}}), Tableau(std::vector<Tableau::Row>{{1}})}));
}

TEST(RsInsert, ShapesAndSchensted) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto [p, q] = rs_insert(w);
      ASSERT_TRUE(p.is_standard()) << w;
      ASSERT_TRUE(q.is_standard()) << w;
      ASSERT_EQ(p.shape(), q.shape()) << w;
      ASSERT_EQ(p.first_row_length(), oracle::lis(w.word())) << w;
      ASSERT_EQ(p.first_column_length(), oracle::lds(w.word())) << w;
      ASSERT_EQ(inverse_rs(p, q), w);
    }
}

TEST(RsInsert, InverseSwapsTableaux) {
  for (const auto& w : all_permutations(6)) {
    const auto a = rs_insert(w), b = rs_insert(w.inverse());
    ASSERT_EQ(a.p, b.q);
    ASSERT_EQ(a.q, b.p);
  }
}

TEST(InverseRs, Examples) {
  const Tableau q0({{1, 3, 6}, {2, 5}, {4}});
  EXPECT_EQ(inverse_rs(q0, q0).to_string(), "425136");
  EXPECT_EQ(inverse_rs(Tableau(std::vector<Tableau::Row>{{1}}), Tableau(std::vector<Tableau::Row>{{1}})).to_string(), "1");
  const auto w = parse_permutation("5623714");
  const auto pq = rs_insert(w);
  EXPECT_EQ(inverse_rs(pq.p, pq.q), w);
}

TEST(InverseRs, Errors) {
  try {
    inverse_rs(Tableau({{1, 2}, {3}}), Tableau({{1, 2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
  try {
    inverse_rs(Tableau({{1, 3, 4}, {2, 7}, {5, 6}}), Tableau({{1, 3, 4}, {2, 7}, {5, 6}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStandard);
  }
}

TEST(InverseRs, BijectionCountsMatchHookLengths) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t pairs = 0;
    for (const auto& shape : partitions_of(n)) {
      const auto syt = standard_tableaux(shape);
      ASSERT_EQ(syt.size(), oracle::hook_length_count(shape.parts())) << shape;
      pairs += syt.size() * syt.size();
    }
    EXPECT_EQ(pairs, factorial(n));
  }
}

TEST(ReadingWords, RowWord) {
  EXPECT_EQ(row_reading_word(Tableau({{1, 3, 6}, {2, 5}, {4}})).to_string(), "425136");
  EXPECT_EQ(row_reading_word(Tableau({{1, 2, 3}})).to_string(), "123");
  EXPECT_EQ(row_reading_word(Tableau({{1}, {2}, {3}})).to_string(), "321");
}

TEST(ReadingWords, ColumnWord) {
  EXPECT_EQ(column_reading_word(Tableau({{1, 2, 5}, {3, 4, 8}, {6, 7}})).to_string(), "63174285");
  EXPECT_EQ(column_reading_word(Tableau({{1, 2, 3}})).to_string(), "123");
  EXPECT_EQ(column_reading_word(Tableau({{1}, {2}, {3}, {4}, {5}})).to_string(), "54321");
  EXPECT_THROW(column_reading_word(Tableau({{2, 1}})), Error);
}

TEST(ReadingWords, InsertBackToTableau) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : standard_tableaux(n)) {
      ASSERT_EQ(insertion_tableau(row_reading_word(t)), t);
      ASSERT_EQ(insertion_tableau(column_reading_word(t)), t);
    }
}

TEST(ReadingWords, ColumnWordIffColumnSuperstandardQ) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> column_words;
    for (const auto& t : standard_tableaux(n)) column_words.insert(column_reading_word(t));
    for (const auto& w : all_permutations(n)) {
      const auto q = recording_tableau(w);
      ASSERT_EQ(column_words.count(w) == 1, q == column_superstandard(q.shape())) << w;
    }
  }
}

TEST(ColumnWord, Example63174285) {
  const auto w = parse_permutation("63174285");
  const Tableau t({{1, 2, 5}, {3, 4, 8}, {6, 7}});
  EXPECT_EQ(column_reading_word(t), w);
  EXPECT_EQ(insertion_tableau(w), t);
  EXPECT_EQ(recording_tableau(w), column_superstandard(Partition({3, 3, 2})));
}

TEST(Superstandard, Examples) {
  EXPECT_EQ(column_superstandard(Partition({3, 3, 2})), Tableau({{1, 4, 7}, {2, 5, 8}, {3, 6}}));
  EXPECT_EQ(column_superstandard(Partition({4})), Tableau({{1, 2, 3, 4}}));
  EXPECT_EQ(column_superstandard(Partition({3, 2, 2, 1, 1})), Tableau({{1, 6, 9}, {2, 7}, {3, 8}, {4}, {5}}));
  EXPECT_EQ(row_superstandard(Partition({3, 2})), Tableau({{1, 2, 3}, {4, 5}}));
}

TEST(Statistics, Examples) {
  const auto w = parse_permutation("5623714");
  EXPECT_EQ(incr(w), 3);
  EXPECT_EQ(decr(w), 3);
  EXPECT_EQ(des(w), 2);
  const auto id = Permutation::identity(7);
  EXPECT_EQ(incr(id), 7);
  EXPECT_EQ(decr(id), 1);
  EXPECT_EQ(des(id), 0);
}

TEST(Statistics, MatchSubsetOracles) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      ASSERT_EQ(incr(w), oracle::lis(w.word())) << w;
      ASSERT_EQ(decr(w), oracle::lds(w.word())) << w;
    }
}
