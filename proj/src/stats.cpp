#include "aztec/stats.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace aztec {

namespace {

std::vector<int> complement(int n, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(n - set.size());
  auto it = set.begin();
  for (int v = 1; v <= n; ++v) {
    if (it != set.end() && *it == v)
      ++it;
    else
      out.push_back(v);
  }
  return out;
}

// Covariance matrix of 0/1 indicators from a weighted table of "ones" sets.
template <class Ones>
CovarianceReport covariance_of_indicators(int size, std::size_t rows, Ones ones_of,
                                          const std::function<const Rational&(std::size_t)>& prob) {
  std::vector<Rational> marginal(size, Rational(0));
  std::vector<std::vector<Rational>> joint(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::vector<int>& ones = ones_of(r);
    const Rational& p = prob(r);
    for (std::size_t a = 0; a < ones.size(); ++a) {
      marginal[ones[a] - 1] += p;
      for (std::size_t b = a; b < ones.size(); ++b) joint[ones[a] - 1][ones[b] - 1] += p;
    }
  }
  CovarianceReport rep;
  rep.size = size;
  rep.covariance.assign(size, std::vector<Rational>(size));
  for (int s = 0; s < size; ++s) {
    for (int t = s; t < size; ++t) {
      const Rational cov = joint[s][t] - marginal[s] * marginal[t];
      rep.covariance[s][t] = rep.covariance[t][s] = cov;
      if (s == t) continue;
      if (cov > 0)
        rep.positive_pairs.emplace_back(s + 1, t + 1);
      else if (cov < 0)
        ++rep.negative;
      else
        ++rep.zero;
    }
  }
  return rep;
}

}  // namespace

PartitionDistribution build_distribution(int k) {
  if (k < 0 || k > max_distribution_k)
    throw std::domain_error("build_distribution: k must be in [0, " + std::to_string(max_distribution_k) + "]");
  PartitionDistribution dist;
  dist.k = k;
  dist.table.reserve(static_cast<std::size_t>(binomial(2 * k, k)));
  const BigCount total = pow2(static_cast<unsigned long>(k) * k);
  BigCount sum = 0;
  for_each_subset(2 * k, k, [&](const std::vector<int>& a) {
    auto p = BalancedPartition::from_zigs(k, a);
    BigCount w = weight(p.zigs()) * weight(p.zags());
    sum += w;
    Rational prob(w, total);
    prob.canonicalize();
    dist.table.push_back({std::move(p), std::move(w), std::move(prob)});
  });
  if (sum != total) throw std::logic_error("build_distribution: weights do not sum to 2^{k^2}");
  return dist;
}

IndependenceReport independence_check(const PartitionDistribution& dist) {
  const int k = dist.k;
  IndependenceReport rep;
  rep.expected = Rational(1, 1);
  rep.expected /= pow2(k);
  std::vector<Rational> by_mask(std::size_t{1} << k, Rational(0));
  for (const auto& e : dist.table) {
    unsigned mask = 0;
    for (int z : e.partition.zigs())
      if (z % 2 == 0) mask |= 1u << (z / 2 - 1);
    by_mask[mask] += e.probability;
  }
  for (unsigned mask = 0; mask < by_mask.size(); ++mask) {
    std::vector<int> evens;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) evens.push_back(2 * (b + 1));
    if (by_mask[mask] != rep.expected) rep.independent = false;
    rep.rows.push_back({std::move(evens), by_mask[mask]});
  }
  return rep;
}

MomentReport nm_moments(const PartitionDistribution& dist, int m) {
  if (m < 1 || m > 2 * dist.k) throw std::out_of_range("nm_moments: m must be in [1, 2k]");
  Rational first = 0, second = 0;
  for (const auto& e : dist.table) {
    const auto& zigs = e.partition.zigs();
    const long below = std::upper_bound(zigs.begin(), zigs.end(), m) - zigs.begin();
    first += e.probability * below;
    second += e.probability * (below * below);
  }
  MomentReport rep;
  rep.m = m;
  rep.mean = first;
  rep.variance = second - first * first;
  rep.variance_bound = Rational(m, 2);
  rep.variance_bound.canonicalize();
  rep.within_bound = rep.variance <= rep.variance_bound;
  return rep;
}

std::vector<std::pair<int, Rational>> variance_profile(const PartitionDistribution& dist) {
  std::vector<std::pair<int, Rational>> out;
  for (int m = 1; m <= 2 * dist.k; ++m) out.emplace_back(m, nm_moments(dist, m).variance);
  return out;
}

std::vector<std::pair<int, Rational>> variance_profile(int k) { return variance_profile(build_distribution(k)); }

Rational pair_correlation(const PartitionDistribution& dist, int s, int t) {
  if (s < 1 || t <= s || t > 2 * dist.k) throw std::out_of_range("pair_correlation: need 1 <= s < t <= 2k");
  Rational ps = 0, pt = 0, pst = 0;
  for (const auto& e : dist.table) {
    const bool in_s = e.partition.contains_zig(s);
    const bool in_t = e.partition.contains_zig(t);
    if (in_s) ps += e.probability;
    if (in_t) pt += e.probability;
    if (in_s && in_t) pst += e.probability;
  }
  return pst - ps * pt;
}

std::vector<Rational> zig_marginals(const PartitionDistribution& dist) {
  std::vector<Rational> out(2 * dist.k, Rational(0));
  for (const auto& e : dist.table)
    for (int z : e.partition.zigs()) out[z - 1] += e.probability;
  return out;
}

CovarianceReport partition_correlation_report(const PartitionDistribution& dist) {
  return covariance_of_indicators(
      2 * dist.k, dist.table.size(), [&](std::size_t r) -> const std::vector<int>& { return dist.table[r].partition.zigs(); },
      [&](std::size_t r) -> const Rational& { return dist.table[r].probability; });
}

SubsetDistribution build_subset_distribution(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("build_subset_distribution: need 0 <= k <= n");
  if (binomial(n, k) > max_subset_table) throw std::domain_error("build_subset_distribution: C(n, k) exceeds 10^6");
  SubsetDistribution dist;
  dist.n = n;
  dist.k = k;
  const BigCount total = pow2(static_cast<unsigned long>(k) * (n - k));
  BigCount sum = 0;
  for_each_subset(n, k, [&](const std::vector<int>& a) {
    BigCount w = weight(a) * weight(complement(n, a));
    sum += w;
    Rational prob(w, total);
    prob.canonicalize();
    dist.table.push_back({a, std::move(w), std::move(prob)});
  });
  if (sum != total) throw std::logic_error("build_subset_distribution: weights do not sum to 2^{k(n-k)}");
  return dist;
}

CovarianceReport subset_correlation_report(const SubsetDistribution& dist) {
  return covariance_of_indicators(
      dist.n, dist.table.size(), [&](std::size_t r) -> const std::vector<int>& { return dist.table[r].ones; },
      [&](std::size_t r) -> const Rational& { return dist.table[r].probability; });
}

std::vector<BalancedPartition> sample_partitions(const PartitionDistribution& dist, std::size_t count,
                                                 std::uint64_t seed) {
  if (dist.table.empty()) throw std::invalid_argument("sample_partitions: empty distribution");
  std::vector<BigCount> cumulative;
  cumulative.reserve(dist.table.size());
  BigCount running = 0;
  for (const auto& e : dist.table) {
    running += e.weight;
    cumulative.push_back(running);
  }
  const unsigned long bits = static_cast<unsigned long>(dist.k) * dist.k;
  const unsigned long words = (bits + 63) / 64;

  std::mt19937_64 rng(seed);
  std::vector<BalancedPartition> out;
  out.reserve(count);
  BigCount u, word;
  for (std::size_t draw = 0; draw < count; ++draw) {
    u = 0;
    for (unsigned long w = 0; w < words; ++w) {
      const std::uint64_t x = rng();
      mpz_import(word.get_mpz_t(), 1, 1, sizeof x, 0, 0, &x);
      u = (u << 64) + word;
    }
    mpz_tdiv_r_2exp(u.get_mpz_t(), u.get_mpz_t(), bits);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    out.push_back(dist.table[static_cast<std::size_t>(it - cumulative.begin())].partition);
  }
  return out;
}

}  // namespace aztec
