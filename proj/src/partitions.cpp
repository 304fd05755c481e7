#include "aztec/partitions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace aztec {

namespace {

bool strictly_increasing_positive(std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

}  // namespace

BalancedPartition BalancedPartition::from_zigs(int k, std::vector<int> zigs) {
  if (k < 0) throw std::invalid_argument("balanced partition: negative k");
  if (static_cast<int>(zigs.size()) != k)
    throw std::invalid_argument("balanced partition: zig set must have exactly k elements");
  if (!strictly_increasing_positive(zigs) || (k > 0 && zigs.back() > 2 * k))
    throw std::invalid_argument("balanced partition: zig set must be strictly increasing in [1, 2k]");
  BalancedPartition p;
  p.k_ = k;
  p.zigs_ = std::move(zigs);
  p.zags_.reserve(k);
  auto it = p.zigs_.begin();
  for (int v = 1; v <= 2 * k; ++v) {
    if (it != p.zigs_.end() && *it == v)
      ++it;
    else
      p.zags_.push_back(v);
  }
  return p;
}

bool BalancedPartition::contains_zig(int position) const {
  return std::binary_search(zigs_.begin(), zigs_.end(), position);
}

std::string BalancedPartition::signature() const {
  std::string s(2 * k_, 'a');
  for (int z : zigs_) s[z - 1] = 'i';
  return s;
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("shape: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("shape: parts must be weakly decreasing");
  }
}

Shape Shape::staircase(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = k - i;
  return Shape(std::move(p));
}

Shape Shape::staircase_below(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = k - 1 - i;
  return Shape(std::move(p));
}

int Shape::rows() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Shape::boxes() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool operator==(const Shape& a, const Shape& b) {
  const int r = a.rows();
  if (r != b.rows()) return false;
  return std::equal(a.parts_.begin(), a.parts_.begin() + r, b.parts_.begin());
}

Shape shape_of_set(std::span<const int> sorted_set) {
  if (!strictly_increasing_positive(sorted_set))
    throw std::invalid_argument("shape_of_set: set must be strictly increasing and positive");
  const int k = static_cast<int>(sorted_set.size());
  std::vector<int> parts(k);
  for (int r = 0; r < k; ++r) parts[r] = sorted_set[k - 1 - r] - (k - r);
  return Shape(std::move(parts));
}

Shape shape_of_zigs(const BalancedPartition& p) { return shape_of_set(p.zigs()); }

BigCount weight(std::span<const int> sorted_set) {
  if (!strictly_increasing_positive(sorted_set))
    throw std::invalid_argument("weight: set must be strictly increasing and positive");
  BigCount num = 1;
  BigCount den = 1;
  const std::size_t k = sorted_set.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      num *= sorted_set[j] - sorted_set[i];
      den *= static_cast<unsigned long>(j - i);
    }
  }
  BigCount q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weight: inexact division");
  return q;
}

namespace {

struct TableauFiller {
  std::vector<int> parts;
  int max_entry;
  const std::function<void(const std::vector<int>&)>& visit;
  std::vector<std::vector<int>> grid;
  std::vector<int> content;

  void fill(int row, int col) {
    if (row == static_cast<int>(parts.size())) {
      visit(content);
      return;
    }
    if (col == parts[row]) {
      fill(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid[row][col - 1]);
    if (row > 0) lo = std::max(lo, grid[row - 1][col] + 1);
    // Column entries strictly increase, so the rows still below need room.
    int below = 0;
    for (std::size_t r = row + 1; r < parts.size() && parts[r] > col; ++r) ++below;
    for (int e = lo; e <= max_entry - below; ++e) {
      grid[row][col] = e;
      ++content[e - 1];
      fill(row, col + 1);
      --content[e - 1];
    }
  }
};

}  // namespace

void for_each_ssyt(const Shape& shape, int max_entry,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (max_entry < 1) throw std::invalid_argument("for_each_ssyt: max_entry must be >= 1");
  std::vector<int> parts(shape.parts().begin(), shape.parts().begin() + shape.rows());
  if (static_cast<int>(parts.size()) > max_entry) return;
  TableauFiller f{parts, max_entry, visit, {}, std::vector<int>(max_entry, 0)};
  for (int p : parts) f.grid.emplace_back(p, 0);
  f.fill(0, 0);
}

BigCount ssyt_count(const Shape& shape, int max_entry) {
  BigCount total = 0;
  for_each_ssyt(shape, max_entry, [&](const std::vector<int>&) { ++total; });
  return total;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    visit(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + 1 + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<BalancedPartition> enumerate_balanced(int k, const std::optional<std::vector<int>>& fixed_evens) {
  if (k < 0) throw std::invalid_argument("enumerate_balanced: negative k");
  if (fixed_evens) {
    for (int e : *fixed_evens) {
      if (e < 2 || e > 2 * k || e % 2 != 0)
        throw std::invalid_argument("enumerate_balanced: fixed evens must be even numbers in [2, 2k]");
    }
  }
  std::vector<int> wanted;
  if (fixed_evens) {
    wanted = *fixed_evens;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  }
  std::vector<BalancedPartition> out;
  for_each_subset(2 * k, k, [&](const std::vector<int>& a) {
    if (fixed_evens) {
      std::vector<int> evens;
      for (int v : a)
        if (v % 2 == 0) evens.push_back(v);
      if (evens != wanted) return;
    }
    out.push_back(BalancedPartition::from_zigs(k, a));
  });
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binomial: result exceeds 64 bits");
  }
  return static_cast<long long>(r);
}

}  // namespace aztec
