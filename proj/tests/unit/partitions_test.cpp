#include <gtest/gtest.h>

#include "hilbsym/partitions/partition.hpp"

using namespace hilbsym::partitions;

TEST(Partitions, EnumerationCounts) {
  ASSERT_EQ(enumerate(0).size(), 1U);
  EXPECT_TRUE(enumerate(0)[0].empty());
  EXPECT_EQ(enumerate(4).size(), 5U);
  EXPECT_EQ(enumerate(6).size(), 11U);
  const auto p4 = enumerate(4);
  EXPECT_EQ(p4.front(), Partition({4}));
  EXPECT_EQ(p4.back(), Partition({1, 1, 1, 1}));
  for (std::size_t i = 1; i < p4.size(); ++i) EXPECT_GT(p4[i - 1], p4[i]);
}

TEST(Partitions, Zfactor) {
  EXPECT_EQ(zfactor({1, 1}), 2);
  EXPECT_EQ(zfactor({2, 1, 1}), 4);
  EXPECT_EQ(zfactor({3, 3}), 18);
}

TEST(Partitions, ContentSum) {
  EXPECT_EQ(content_sum({1}), WeightForm(0, 0));
  EXPECT_EQ(content_sum({2}), WeightForm(1, 0));
  EXPECT_EQ(content_sum({2, 1}), WeightForm(1, 1));
}

TEST(Partitions, TangentWeightsOfPoint) {
  const auto w = tangent_weights({1});
  ASSERT_EQ(w.size(), 2U);
  EXPECT_EQ(w[0], WeightForm(1, 0));
  EXPECT_EQ(w[1], WeightForm(0, 1));
}

TEST(Partitions, TangentWeightSumIsFirstChernClass) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : enumerate(n)) {
      WeightForm s;
      for (const auto& w : tangent_weights(lam)) s += w;
      EXPECT_EQ(s, WeightForm(n, n)) << lam.to_string();
      EXPECT_EQ(tangent_weights(lam).size(), static_cast<std::size_t>(2 * n));
    }
  }
}

TEST(Partitions, ConjugationSwapsWeights) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : enumerate(n)) {
      auto a = tangent_weights(lam.conjugate());
      auto b = tangent_weights(lam);
      for (auto& w : b) w = w.swapped();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b) << lam.to_string();
    }
  }
}

TEST(Partitions, ArmsLegsAndConjugate) {
  const Partition lam({3, 1});
  EXPECT_EQ(lam.conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(lam.arm(1, 1), 2);
  EXPECT_EQ(lam.leg(1, 1), 1);
  EXPECT_EQ(lam.n_statistic(), 1);
  EXPECT_EQ(lam.with_part(2), Partition({3, 2, 1}));
  EXPECT_EQ(lam.without_part(1), Partition({3}));
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}
