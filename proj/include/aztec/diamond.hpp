#pragma once

#include "aztec/numeric.hpp"
#include "aztec/partitions.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aztec {

/// Unit cell named by its lower-left corner; its center is (i + 1/2, j + 1/2).
struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Aztec diamond of order n: cells with |i + 1/2| + |j + 1/2| <= n.
class Diamond {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= max_order.
  explicit Diamond(int n);

  static constexpr int max_order = 31;

  int order() const { return n_; }
  /// ceil(n / 2); the spine has 2k cells.
  int k() const { return (n_ + 1) / 2; }
  /// floor(n / 2)
  int k_floor() const { return n_ / 2; }
  int spine_length() const { return 2 * k(); }

  bool contains(Cell c) const;
  /// Row-major, j ascending then i ascending.
  std::vector<Cell> cells() const;
  std::size_t cell_count() const { return 2u * n_ * (n_ + 1); }
  /// Diagonal cells (i, i), southwest to northeast; spine square p is
  /// spine()[p - 1].
  std::vector<Cell> spine() const;

  /// Bounding box is [-n, n) in both coordinates.
  int min_coord() const { return -n_; }
  int width() const { return 2 * n_; }

 private:
  int n_;
};

enum class Mark : char { Zig = 'i', Zag = 'a', Zip = '.' };

/// One mark per spine square, SW to NE.
class BarrierConfig {
 public:
  BarrierConfig() = default;
  explicit BarrierConfig(std::vector<Mark> marks) : marks_(std::move(marks)) {}

  /// 'i' zig, 'a' zag, '.' zip. Throws std::invalid_argument on any other
  /// character.
  static BarrierConfig parse(std::string_view text);
  static BarrierConfig all_zip(int length) { return BarrierConfig(std::vector<Mark>(length, Mark::Zip)); }
  /// Zig on the partition's zig set, zag on its zag set.
  static BarrierConfig full_signature(const BalancedPartition& p);

  const std::vector<Mark>& marks() const { return marks_; }
  int size() const { return static_cast<int>(marks_.size()); }
  /// `position` is 1-based.
  Mark at(int position) const { return marks_.at(position - 1); }
  std::string to_string() const;

  friend bool operator==(const BarrierConfig&, const BarrierConfig&) = default;

 private:
  std::vector<Mark> marks_;
};

/// Unordered pair of edge-adjacent cells, stored with first < second.
using CellPair = std::pair<Cell, Cell>;

CellPair make_pair_sorted(Cell a, Cell b);

/// Dominoes sorted; each stored with its smaller cell first.
using Tiling = std::vector<CellPair>;

/// Dual-graph edges removed by the barriers. A zig blocks a spine cell's
/// south and east adjacencies, a zag its north and west ones; adjacencies
/// leaving the diamond are dropped. Throws std::invalid_argument when the
/// config length differs from the spine length.
std::set<CellPair> blocked_edges(const Diamond& d, const BarrierConfig& cfg);

/// Full zig/zag pattern forced by a tiling: a spine cell whose partner lies
/// west or north is a zig, east or south a zag. Throws std::invalid_argument
/// if some spine cell is uncovered.
std::vector<Mark> spine_signature(const Tiling& t, const Diamond& d);

/// The balanced partition read off a full signature. Throws
/// std::invalid_argument if the signature is unbalanced or contains zips.
BalancedPartition partition_of_signature(const std::vector<Mark>& signature);

std::string marks_to_string(const std::vector<Mark>& marks);

/// weight(A) * weight(B) * 2^{k'(k'+1)}: the number of tilings of the order-n
/// diamond whose spine signature is `p`. Throws std::invalid_argument when
/// p.k() != ceil(n/2).
BigCount signature_class_size(const BalancedPartition& p, int n);

}  // namespace aztec
