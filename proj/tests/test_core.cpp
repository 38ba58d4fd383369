#include <gtest/gtest.h>

#include "boxball/boxball.hpp"

using namespace boxball;

namespace {

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Permutation, AcceptsWordsAndRoundTrips) {
  const Permutation w({4, 5, 2, 3, 6, 1});
  EXPECT_EQ(w.size(), 6);
  EXPECT_EQ(w.to_string(), "452361");
  EXPECT_EQ(Permutation(w.word()), w);
  EXPECT_EQ(Permutation({1}).to_string(), "1");
}

TEST(Permutation, RejectsBadWords) {
  EXPECT_EQ(error_of([] { Permutation({1, 1, 2}); }), ErrorCode::DuplicateValue);
  EXPECT_EQ(error_of([] { Permutation({1, 4, 2}); }), ErrorCode::OutOfRangeValue);
  EXPECT_EQ(error_of([] { Permutation({0, 1}); }), ErrorCode::OutOfRangeValue);
}

TEST(Permutation, InverseAndReverse) {
  const Permutation w({4, 5, 2, 3, 6, 1});
  EXPECT_EQ(w.inverse().to_string(), "634125");
  EXPECT_EQ(w.reversed().to_string(), "163254");
  EXPECT_EQ(Permutation::identity(4).to_string(), "1234");
}

TEST(Permutation, ParsesBothForms) {
  EXPECT_EQ(parse_permutation("452361"), Permutation({4, 5, 2, 3, 6, 1}));
  EXPECT_EQ(parse_permutation("4,5,2,3,6,1"), Permutation({4, 5, 2, 3, 6, 1}));
  const auto big = parse_permutation("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(error_of([] { parse_permutation("45x"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_permutation("112"); }), ErrorCode::DuplicateValue);
}

TEST(Partition, ValidatesAndConjugates) {
  const Partition p({3, 2, 2, 1, 1});
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.length(), 5);
  EXPECT_EQ(p.conjugate(), Partition({5, 3, 1}));
  EXPECT_EQ(p.to_string(), "(3,2,2,1,1)");
  EXPECT_FALSE(p.is_hook());
  EXPECT_TRUE(Partition({5, 1, 1, 1, 1}).is_hook());
  EXPECT_EQ(error_of([] { Partition({1, 2}); }), ErrorCode::NotPartitionShape);
}

TEST(Partition, EnumeratesAllPartitions) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), counts[static_cast<std::size_t>(n)]) << n;
}

TEST(Tableau, ShapeOf) {
  EXPECT_EQ(Tableau({{1, 3, 6}, {2, 5}, {4}}).shape(), Partition({3, 2, 1}));
  EXPECT_EQ(Tableau(std::vector<Tableau::Row>{{1}}).shape(), Partition({1}));
  EXPECT_EQ(error_of([] { (void)Tableau({{1, 3}, {2, 4, 5}}).shape(); }), ErrorCode::NotPartitionShape);
}

TEST(Tableau, IsStandard) {
  EXPECT_TRUE(Tableau({{1, 3, 6}, {2, 5}, {4}}).is_standard());
  EXPECT_FALSE(Tableau({{1, 3, 4}, {2, 7}, {5, 6}}).is_standard());
  EXPECT_TRUE(Tableau(std::vector<Tableau::Row>{{1}}).is_standard());
  for (int n = 1; n <= 9; ++n) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = i + 1;
    EXPECT_TRUE(Tableau({row}).is_standard());
  }
}

TEST(Tableau, ShapeOfStandardIsPartition) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : standard_tableaux(n)) {
      const auto lens = t.row_lengths();
      EXPECT_TRUE(std::is_sorted(lens.rbegin(), lens.rend()));
      EXPECT_EQ(t.shape().size(), n);
    }
}

TEST(Tableau, FormattingAndLookup) {
  const Tableau t({{1, 3, 6}, {2, 5}, {4}});
  EXPECT_EQ(t.to_string(), "136/25/4");
  EXPECT_EQ(t.first_row_length(), 3);
  EXPECT_EQ(t.first_column_length(), 3);
  ASSERT_TRUE(t.find(5));
  EXPECT_EQ(*t.find(5), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_FALSE(t.find(9));
}

TEST(Configuration, TrimsAndIndexes) {
  const BbsConfiguration x(1, {0, 0, 4, 5, 0, 2, 1, 3, 6, 0});
  EXPECT_EQ(x.offset(), 3);
  EXPECT_EQ(x.last_box(), 9);
  EXPECT_EQ(x.ball_count(), 6);
  EXPECT_EQ(x.value(5), 7);
  EXPECT_EQ(x.value(100), 7);
  EXPECT_EQ(x.value(6), 2);
  EXPECT_EQ(x.compact(1), "ee45e2136");
  EXPECT_EQ(x.render(), "4 5 . 2 1 3 6");
  EXPECT_EQ(x.balls_in_order(), (std::vector<int>{4, 5, 2, 1, 3, 6}));
  EXPECT_EQ(x.occupied_boxes(), (std::vector<BbsConfiguration::Box>{3, 4, 6, 7, 8, 9}));
  EXPECT_EQ(x.ball_positions()[1], 7);
}

TEST(Configuration, RejectsBadCells) {
  EXPECT_EQ(error_of([] { BbsConfiguration(1, {0, 0}); }), ErrorCode::OutOfRangeValue);
  EXPECT_EQ(error_of([] { BbsConfiguration(1, {1, 3}); }), ErrorCode::OutOfRangeValue);
  EXPECT_EQ(error_of([] { BbsConfiguration(1, {1, 0, 1}); }), ErrorCode::DuplicateValue);
  EXPECT_EQ(error_of([] { parse_compact_configuration("12x"); }), ErrorCode::ParseError);
}

TEST(Configuration, CompactParse) {
  const auto x = parse_compact_configuration("452ee136");
  EXPECT_EQ(x.offset(), 1);
  EXPECT_EQ(x.cells(), (std::vector<int>{4, 5, 2, 0, 0, 1, 3, 6}));
  EXPECT_EQ(parse_compact_configuration("..21", 5).offset(), 7);
}

TEST(Errors, NamesAreStable) {
  EXPECT_STREQ(to_string(ErrorCode::DuplicateValue), "DUPLICATE_VALUE");
  EXPECT_STREQ(to_string(ErrorCode::CapExceeded), "CAP_EXCEEDED");
  EXPECT_STREQ(to_string(ErrorCode::UnknownSuite), "UNKNOWN_SUITE");
}
