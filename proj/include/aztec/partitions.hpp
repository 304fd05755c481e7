#pragma once

#include "aztec/numeric.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aztec {

/// A split of {1, ..., 2k} into two k-sets: the zig positions and the zag
/// positions along a spine of length 2k.
class BalancedPartition {
 public:
  /// Builds the partition whose zig set is `zigs`; the zag set is the
  /// complement in {1, ..., 2k}. Throws std::invalid_argument unless `zigs`
  /// is a strictly increasing k-subset of [1, 2k].
  static BalancedPartition from_zigs(int k, std::vector<int> zigs);

  int k() const { return k_; }
  const std::vector<int>& zigs() const { return zigs_; }
  const std::vector<int>& zags() const { return zags_; }

  bool contains_zig(int position) const;
  /// 'i' for zig, 'a' for zag, SW to NE.
  std::string signature() const;

  friend bool operator==(const BalancedPartition&, const BalancedPartition&) = default;

 private:
  BalancedPartition() = default;
  int k_ = 0;
  std::vector<int> zigs_;
  std::vector<int> zags_;
};

/// Integer partition; weakly decreasing, trailing zeros allowed.
class Shape {
 public:
  Shape() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Shape(std::vector<int> parts);

  /// (k, k-1, ..., 1)
  static Shape staircase(int k);
  /// (k-1, k-2, ..., 0), padded to k parts.
  static Shape staircase_below(int k);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of non-zero rows.
  int rows() const;
  int boxes() const;

  /// Equality ignores trailing zeros.
  friend bool operator==(const Shape& a, const Shape& b);

 private:
  std::vector<int> parts_;
};

/// (a_k - k, a_{k-1} - (k-1), ..., a_1 - 1) for a strictly increasing set
/// a_1 < ... < a_k of positive integers.
Shape shape_of_set(std::span<const int> sorted_set);
Shape shape_of_zigs(const BalancedPartition& p);

/// prod_{i<j} (a_j - a_i) / (j - i) over a strictly increasing set of
/// positive integers. Numerator and denominator are accumulated separately
/// and divided once; a non-zero remainder throws std::logic_error.
BigCount weight(std::span<const int> sorted_set);

/// Calls `visit(content)` once per semistandard tableau of `shape` with
/// entries in [1, max_entry]; content[e-1] is the number of entries equal
/// to e. Exhaustive backtracking, meant for small shapes.
void for_each_ssyt(const Shape& shape, int max_entry,
                   const std::function<void(const std::vector<int>&)>& visit);

/// Exhaustive count of semistandard tableaux; the oracle for `weight`.
BigCount ssyt_count(const Shape& shape, int max_entry);

/// Calls `visit` with every k-subset of {1, ..., n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

/// Every balanced partition of {1, ..., 2k}, lexicographic in the zig set.
/// With `fixed_evens`, only those whose zig set meets {2, 4, ..., 2k} in
/// exactly `fixed_evens`.
std::vector<BalancedPartition> enumerate_balanced(
    int k, const std::optional<std::vector<int>>& fixed_evens = std::nullopt);

/// C(n, k) as a machine integer; throws std::overflow_error past 2^63.
long long binomial(int n, int k);

}  // namespace aztec
