#include "aztec/stats.hpp"
#include "aztec/count.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

namespace aztec {
namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

TEST(Distribution, SmallTables) {
  const auto d1 = build_distribution(1);
  ASSERT_EQ(d1.table.size(), 2u);
  EXPECT_EQ(d1.table[0].probability, q(1, 2));
  EXPECT_EQ(d1.table[1].probability, q(1, 2));

  const auto d2 = build_distribution(2);
  const long expected[] = {1, 4, 3, 3, 4, 1};
  ASSERT_EQ(d2.table.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(d2.table[i].probability, q(expected[i], 16)) << i;
  EXPECT_EQ(d2.table[1].partition.zigs(), (std::vector<int>{1, 3}));

  const auto d0 = build_distribution(0);
  ASSERT_EQ(d0.table.size(), 1u);
  EXPECT_EQ(d0.table[0].probability, 1);
}

TEST(Distribution, NormalizedAndSymmetric) {
  for (int k = 0; k <= 6; ++k) {
    const auto dist = build_distribution(k);
    Rational sum = 0;
    for (const auto& e : dist.table) sum += e.probability;
    EXPECT_EQ(sum, 1);
    for (const auto& m : zig_marginals(dist)) EXPECT_EQ(m, q(1, 2));
  }
  EXPECT_THROW(build_distribution(max_distribution_k + 1), std::domain_error);
  EXPECT_THROW(build_distribution(-1), std::domain_error);
}

TEST(Independence, EvenConjunctions) {
  const auto r1 = independence_check(build_distribution(1));
  EXPECT_TRUE(r1.independent);
  EXPECT_EQ(r1.rows[1].probability, q(1, 2));

  const auto r2 = independence_check(build_distribution(2));
  EXPECT_EQ(r2.rows[3].zig_evens, (std::vector<int>{2, 4}));
  EXPECT_EQ(r2.rows[3].probability, q(1, 4));

  for (int k = 3; k <= 6; ++k) {
    const auto r = independence_check(build_distribution(k));
    EXPECT_TRUE(r.independent) << k;
    EXPECT_EQ(r.rows.size(), std::size_t{1} << k);
    for (const auto& row : r.rows) EXPECT_EQ(row.probability, r.expected);
  }
}

TEST(Moments, Examples) {
  const auto d2 = build_distribution(2);
  EXPECT_EQ(nm_moments(d2, 1).mean, q(1, 2));
  const auto full = nm_moments(d2, 4);
  EXPECT_EQ(full.mean, 2);
  EXPECT_EQ(full.variance, 0);
  EXPECT_THROW(nm_moments(d2, 0), std::out_of_range);
  EXPECT_THROW(nm_moments(d2, 5), std::out_of_range);
}

TEST(Moments, MeanAndBound) {
  for (int k = 1; k <= 6; ++k) {
    const auto dist = build_distribution(k);
    for (int m = 1; m <= 2 * k; ++m) {
      const auto r = nm_moments(dist, m);
      EXPECT_EQ(r.mean, q(m, 2));
      EXPECT_TRUE(r.within_bound);
      EXPECT_LE(r.variance, q(m, 2));
    }
  }
}

TEST(VarianceProfile, Values) {
  const auto p1 = variance_profile(1);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0].second, q(1, 4));
  EXPECT_EQ(p1[1].second, 0);
  // k = 2 by hand from the (1,4,3,3,4,1)/16 table: N_1 is Bernoulli(1/2);
  // N_2 is 2 w.p. 1/16, 0 w.p. 1/16, else 1.
  const auto p2 = variance_profile(2);
  EXPECT_EQ(p2[0].second, q(1, 4));
  EXPECT_EQ(p2[1].second, q(1, 8));
  EXPECT_EQ(p2[2].second, q(1, 4));
  EXPECT_EQ(p2[3].second, 0);
}

TEST(PairCorrelation, Examples) {
  const auto d2 = build_distribution(2);
  EXPECT_EQ(pair_correlation(d2, 2, 4), 0);
  EXPECT_EQ(pair_correlation(d2, 1, 3), 0);
  EXPECT_EQ(pair_correlation(d2, 1, 2), q(-3, 16));
  EXPECT_THROW(pair_correlation(d2, 2, 2), std::out_of_range);
  EXPECT_THROW(pair_correlation(d2, 1, 5), std::out_of_range);
}

TEST(PairCorrelation, SameParityIsZero) {
  for (int k = 1; k <= 6; ++k) {
    const auto dist = build_distribution(k);
    const auto rep = partition_correlation_report(dist);
    for (int s = 1; s <= 2 * k; ++s)
      for (int t = s + 2; t <= 2 * k; t += 2) {
        EXPECT_EQ(pair_correlation(dist, s, t), 0);
        EXPECT_EQ(rep.covariance[s - 1][t - 1], 0);
      }
  }
}

TEST(SubsetDistribution, Examples) {
  const auto d = build_subset_distribution(3, 1);
  ASSERT_EQ(d.table.size(), 3u);
  EXPECT_EQ(d.table[0].probability, q(1, 4));
  EXPECT_EQ(d.table[1].probability, q(1, 2));
  EXPECT_EQ(d.table[2].probability, q(1, 4));

  const auto rep = subset_correlation_report(d);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) EXPECT_LE(rep.covariance[i][j], 0);

  EXPECT_EQ(subset_correlation_report(build_subset_distribution(2, 1)).covariance[0][1], q(-1, 4));
  EXPECT_THROW(build_subset_distribution(3, 4), std::domain_error);
  EXPECT_THROW(build_subset_distribution(30, 15), std::domain_error);
}

TEST(SubsetDistribution, MatchesBalancedCase) {
  for (int k = 1; k <= 5; ++k) {
    const auto a = build_distribution(k);
    const auto b = build_subset_distribution(2 * k, k);
    ASSERT_EQ(a.table.size(), b.table.size());
    for (std::size_t i = 0; i < a.table.size(); ++i) {
      EXPECT_EQ(a.table[i].partition.zigs(), b.table[i].ones);
      EXPECT_EQ(a.table[i].probability, b.table[i].probability);
    }
  }
}

TEST(SubsetDistribution, NormalizedUpToTwelve) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto d = build_subset_distribution(n, k);
      BigCount sum = 0;
      for (const auto& e : d.table) sum += e.weight;
      EXPECT_EQ(sum, pow2(k * (n - k)));
    }
}

TEST(Sampling, DeterministicAndCalibrated) {
  const auto d1 = build_distribution(1);
  const auto a = sample_partitions(d1, 1000, 5);
  EXPECT_EQ(a, sample_partitions(d1, 1000, 5));
  int first = 0;
  for (const auto& p : a) first += p.zigs() == std::vector<int>{1};
  // 5 standard errors of a Bernoulli(1/2) mean over 1000 draws.
  EXPECT_NEAR(first / 1000.0, 0.5, 5 * std::sqrt(0.25 / 1000));

  const auto d3 = build_distribution(3);
  const std::size_t n = 100000;
  const auto draws = sample_partitions(d3, n, 2024);
  double sum = 0;
  for (const auto& p : draws) sum += std::count_if(p.zigs().begin(), p.zigs().end(), [](int z) { return z <= 3; });
  const double var = nm_moments(d3, 3).variance.get_d();
  EXPECT_NEAR(sum / n, 1.5, 5 * std::sqrt(var / n));
}

TEST(Sampling, FrequenciesTrackTheTable) {
  const auto d2 = build_distribution(2);
  const std::size_t n = 64000;
  std::map<std::vector<int>, int> hits;
  for (const auto& p : sample_partitions(d2, n, 77)) ++hits[p.zigs()];
  for (const auto& e : d2.table) {
    const double p = e.probability.get_d();
    EXPECT_NEAR(hits[e.partition.zigs()] / double(n), p, 5 * std::sqrt(p * (1 - p) / n));
  }
}

// Probabilities rescaled by the tiling total give the signature class sizes.
TEST(Distribution, ConsistentWithTilingClasses) {
  for (int n = 1; n <= 4; ++n) {
    const Diamond d(n);
    const int k = d.k(), kf = d.k_floor();
    std::map<std::vector<int>, BigCount> classes;
    for (const auto& t : enumerate_tilings(d, BarrierConfig::all_zip(d.spine_length())))
      classes[partition_of_signature(spine_signature(t, d)).zigs()] += 1;
    for (const auto& e : build_distribution(k).table) {
      const Rational scaled = e.probability * Rational(pow2(k * k) * pow2(kf * (kf + 1)));
      EXPECT_EQ(scaled, Rational(classes[e.partition.zigs()]));
    }
  }
}

}  // namespace
}  // namespace aztec
