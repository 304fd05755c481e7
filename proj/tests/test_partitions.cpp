#include "aztec/partitions.hpp"

#include <gtest/gtest.h>

#include <set>

namespace aztec {
namespace {

TEST(BalancedPartition, ComplementAndSignature) {
  const auto p = BalancedPartition::from_zigs(4, {2, 3, 5, 8});
  EXPECT_EQ(p.zags(), (std::vector<int>{1, 4, 6, 7}));
  EXPECT_EQ(p.signature(), "aiiaiaai");
  EXPECT_TRUE(p.contains_zig(5));
  EXPECT_FALSE(p.contains_zig(6));
}

TEST(BalancedPartition, RejectsMalformedZigSets) {
  EXPECT_THROW(BalancedPartition::from_zigs(2, {1}), std::invalid_argument);
  EXPECT_THROW(BalancedPartition::from_zigs(2, {2, 2}), std::invalid_argument);
  EXPECT_THROW(BalancedPartition::from_zigs(2, {3, 1}), std::invalid_argument);
  EXPECT_THROW(BalancedPartition::from_zigs(2, {1, 5}), std::invalid_argument);
  EXPECT_THROW(BalancedPartition::from_zigs(2, {0, 1}), std::invalid_argument);
}

TEST(BalancedPartition, EmptyIsLegal) {
  const auto p = BalancedPartition::from_zigs(0, {});
  EXPECT_TRUE(p.zags().empty());
  EXPECT_EQ(p.signature(), "");
}

TEST(Shape, OfZigs) {
  EXPECT_EQ(shape_of_set(std::vector<int>{1, 2, 3, 4}).parts(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(shape_of_set(std::vector<int>{2, 3, 5, 8}).parts(), (std::vector<int>{4, 2, 1, 1}));
  EXPECT_EQ(shape_of_set(std::vector<int>{5, 6, 7, 8}).parts(), (std::vector<int>{4, 4, 4, 4}));
  EXPECT_EQ(shape_of_zigs(BalancedPartition::from_zigs(4, {2, 3, 5, 8})), Shape({4, 2, 1, 1}));
}

TEST(Shape, EqualityIgnoresTrailingZeros) {
  EXPECT_EQ(Shape({2, 1}), Shape({2, 1, 0, 0}));
  EXPECT_NE(Shape({2, 1}), Shape({2, 1, 1}));
  EXPECT_EQ(Shape(), Shape({0, 0}));
  EXPECT_THROW(Shape({1, 2}), std::invalid_argument);
  EXPECT_THROW(Shape({-1}), std::invalid_argument);
}

TEST(Shape, Staircases) {
  EXPECT_EQ(Shape::staircase(3).parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(Shape::staircase_below(3).parts(), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(Shape::staircase(3).boxes(), 6);
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(std::vector<int>{1, 2, 3, 4, 5}), 1);
  EXPECT_EQ(weight(std::vector<int>{2, 3, 5, 8}), 45);
  EXPECT_EQ(weight(std::vector<int>{1, 4, 6, 7}), 45);
  EXPECT_EQ(weight(std::vector<int>{1, 3}), 2);
  EXPECT_EQ(weight(std::vector<int>{}), 1);
  EXPECT_THROW(weight(std::vector<int>{3, 1}), std::invalid_argument);
}

TEST(Ssyt, SmallShapes) {
  EXPECT_EQ(ssyt_count(Shape({0, 0}), 2), 1);
  EXPECT_EQ(ssyt_count(Shape({1}), 2), 2);
  EXPECT_EQ(ssyt_count(Shape({2, 1}), 2), 2);
  EXPECT_EQ(ssyt_count(Shape({4, 2, 1, 1}), 4), 45);
  EXPECT_EQ(ssyt_count(Shape({1, 1, 1}), 2), 0);  // more rows than entries
  EXPECT_EQ(ssyt_count(Shape({2, 1}), 3), 8);
}

TEST(Ssyt, ContentSumsToBoxes) {
  int seen = 0;
  for_each_ssyt(Shape({3, 1}), 3, [&](const std::vector<int>& content) {
    ++seen;
    EXPECT_EQ(content[0] + content[1] + content[2], 4);
  });
  EXPECT_EQ(seen, 15);
}

// Exhaustive for k <= 5: the product formula counts the tableaux.
TEST(Weight, MatchesTableauCountExhaustively) {
  for (int k = 0; k <= 5; ++k) {
    for_each_subset(2 * k, k, [&](const std::vector<int>& a) {
      EXPECT_EQ(weight(a), ssyt_count(shape_of_set(a), std::max(k, 1))) << "k=" << k;
    });
  }
}

TEST(Weight, PairProductsSumToPowerOfTwo) {
  for (int k = 0; k <= 6; ++k) {
    BigCount sum = 0;
    for (const auto& p : enumerate_balanced(k)) sum += weight(p.zigs()) * weight(p.zags());
    EXPECT_EQ(sum, pow2(k * k)) << "k=" << k;
  }
}

TEST(Weight, FixedEvenSumsAreIndependentOfTheChoice) {
  for (int k = 1; k <= 5; ++k) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> evens;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) evens.push_back(2 * (b + 1));
      BigCount sum = 0;
      for (const auto& p : enumerate_balanced(k, evens)) sum += weight(p.zigs()) * weight(p.zags());
      EXPECT_EQ(sum, pow2(k * (k - 1))) << "k=" << k << " mask=" << mask;
    }
  }
}

TEST(Enumerate, CountsAndOrder) {
  const auto all = enumerate_balanced(2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front().zigs(), (std::vector<int>{1, 2}));
  EXPECT_EQ(all.back().zigs(), (std::vector<int>{3, 4}));

  const auto forced = enumerate_balanced(2, std::vector<int>{2, 4});
  ASSERT_EQ(forced.size(), 1u);
  EXPECT_EQ(forced[0].zigs(), (std::vector<int>{2, 4}));

  const auto one = enumerate_balanced(2, std::vector<int>{2});
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].zigs(), (std::vector<int>{1, 2}));
  EXPECT_EQ(one[1].zigs(), (std::vector<int>{2, 3}));

  EXPECT_THROW(enumerate_balanced(2, std::vector<int>{3}), std::invalid_argument);
  EXPECT_THROW(enumerate_balanced(2, std::vector<int>{6}), std::invalid_argument);
}

TEST(Enumerate, DistinctAndBinomial) {
  for (int k = 0; k <= 7; ++k) {
    const auto all = enumerate_balanced(k);
    std::set<std::vector<int>> distinct;
    for (const auto& p : all) distinct.insert(p.zigs());
    EXPECT_EQ(static_cast<long long>(all.size()), binomial(2 * k, k));
    EXPECT_EQ(distinct.size(), all.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                               [](const auto& a, const auto& b) { return a.zigs() < b.zigs(); }));
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(20, 10), 184756);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

}  // namespace
}  // namespace aztec
