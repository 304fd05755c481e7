#pragma once

#include "aztec/numeric.hpp"
#include "aztec/partitions.hpp"

#include <cstdint>
#include <vector>

namespace aztec {

inline constexpr int max_distribution_k = 10;
inline constexpr long long max_subset_table = 1'000'000;

/// Distribution on balanced partitions of {1..2k}: P(A, B) is
/// weight(A) * weight(B) / 2^{k^2}.
struct PartitionDistribution {
  struct Entry {
    BalancedPartition partition;
    BigCount weight;  // weight(A) * weight(B)
    Rational probability;
  };

  int k = 0;
  std::vector<Entry> table;  // lexicographic in the zig set
};

/// Throws std::domain_error for k outside [0, max_distribution_k] and
/// std::logic_error if the weights fail to sum to 2^{k^2}.
PartitionDistribution build_distribution(int k);

struct IndependenceReport {
  struct Row {
    std::vector<int> zig_evens;
    Rational probability;
  };
  std::vector<Row> rows;  // one per subset of the evens
  Rational expected;      // 2^{-k}
  bool independent = true;
};

/// P(S in A and evens \ S in B) for every subset S of {2, ..., 2k}.
IndependenceReport independence_check(const PartitionDistribution& dist);

struct MomentReport {
  int m = 0;
  Rational mean;
  Rational variance;
  Rational variance_bound;  // m/2; the deviation bound sqrt(m/2), squared
  bool within_bound = false;
};

/// Mean and variance of N_m = |A cap {1..m}|. Throws std::out_of_range
/// unless 1 <= m <= 2k.
MomentReport nm_moments(const PartitionDistribution& dist, int m);

/// (m, Var N_m) for m = 1..2k.
std::vector<std::pair<int, Rational>> variance_profile(const PartitionDistribution& dist);
std::vector<std::pair<int, Rational>> variance_profile(int k);

/// Cov(1{s in A}, 1{t in A}). Throws std::out_of_range unless
/// 1 <= s < t <= 2k.
Rational pair_correlation(const PartitionDistribution& dist, int s, int t);

/// Marginal P(i in A), i = 1..2k.
std::vector<Rational> zig_marginals(const PartitionDistribution& dist);

struct CovarianceReport {
  int size = 0;
  std::vector<std::vector<Rational>> covariance;  // size x size, 0-based
  /// Off-diagonal pairs with positive covariance, 1-based (s < t).
  std::vector<std::pair<int, int>> positive_pairs;
  int negative = 0;
  int zero = 0;
};

/// Covariances of the zig indicators for every pair of positions.
CovarianceReport partition_correlation_report(const PartitionDistribution& dist);

/// Distribution on k-subsets of {1..n}: weight(A) * weight(complement) over
/// 2^{k(n-k)}.
struct SubsetDistribution {
  struct Entry {
    std::vector<int> ones;  // {i : X_i = 1}
    BigCount weight;
    Rational probability;
  };

  int n = 0;
  int k = 0;
  std::vector<Entry> table;  // lexicographic
};

/// Throws std::domain_error unless 0 <= k <= n and C(n, k) <= max_subset_table;
/// std::logic_error if the weights fail to sum to 2^{k(n-k)}.
SubsetDistribution build_subset_distribution(int n, int k);

/// Covariance matrix of X_1..X_n.
CovarianceReport subset_correlation_report(const SubsetDistribution& dist);

/// `count` i.i.d. draws by inverting the cumulative weight table. A draw is
/// a uniform integer in [0, 2^{k^2}) built from the seeded generator, so the
/// sampling is exact and identical for equal seeds.
std::vector<BalancedPartition> sample_partitions(const PartitionDistribution& dist,
                                                 std::size_t count, std::uint64_t seed);

}  // namespace aztec
