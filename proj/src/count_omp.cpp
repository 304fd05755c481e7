#include "aztec/count.hpp"
#include "board.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace aztec {

namespace {

void check_order(const Diamond& d) {
  if (d.order() > max_count_order)
    throw std::domain_error("count_tilings: order " + std::to_string(d.order()) + " exceeds the ceiling " +
                            std::to_string(max_count_order));
}

// Columns [first, last) of the inside cells of row r; empty past the top.
std::pair<int, int> row_span(const detail::Board& board, int r) {
  if (r >= board.height) return {0, 0};
  int first = board.width, last = 0;
  for (int c = 0; c < board.width; ++c) {
    if (!board.inside[board.at(r, c)]) continue;
    first = std::min(first, c);
    last = c + 1;
  }
  return {first, last};
}

}  // namespace

BigCount count_tilings(const Diamond& d, const BarrierConfig& cfg) {
  check_order(d);
  const detail::Board board(d, cfg);
  std::vector<BigCount> count(std::size_t{1} << board.width);
  count[0] = 1;

  for (int r = 0; r < board.height; ++r) {
    // While sweeping row r, set bits can only sit on inside cells of rows r
    // and r + 1; the diamond's rows are centred, so the wider span covers both.
    const auto [a_first, a_last] = row_span(board, r);
    const auto [b_first, b_last] = row_span(board, r + 1);
    const int lo = b_last > b_first ? std::min(a_first, b_first) : a_first;
    const int hi = std::max(a_last, b_last);
    const int span = hi - lo;

    for (int c = lo; c < hi; ++c) {
      // Nothing reaches an outside cell, so the step is the identity there.
      if (!board.inside[board.at(r, c)]) continue;
      const int local = c - lo;
      const std::int64_t low = (std::int64_t{1} << local) - 1;
      const std::int64_t here = std::int64_t{1} << c;
      const bool vertical = board.north_open[board.at(r, c)];

      if (c + 1 == hi) {
        const std::int64_t pairs = std::int64_t{1} << (span - 1);
#pragma omp parallel for schedule(static)
        for (std::int64_t g = 0; g < pairs; ++g) {
          const std::int64_t s0 = (((g & ~low) << 1) | (g & low)) << lo;
          const std::int64_t s1 = s0 | here;
          std::swap(count[s0], count[s1]);
          if (!vertical) count[s1] = 0;
        }
        continue;
      }

      const bool horizontal = board.east_open[board.at(r, c)];
      const std::int64_t next = here << 1;
      const std::int64_t groups = std::int64_t{1} << (span - 2);
#pragma omp parallel for schedule(static)
      for (std::int64_t g = 0; g < groups; ++g) {
        // Insert zero bits at positions c and c + 1.
        const std::int64_t base = (((g & ~low) << 2) | (g & low)) << lo;
        BigCount& both_free = count[base];
        BigCount& next_taken = count[base | next];
        BigCount& here_taken = count[base | here];
        BigCount& both_taken = count[base | here | next];
        // here taken: pass over it. here free: vertical sets bit c,
        // horizontal sets bit c + 1.
        if (horizontal) both_taken += both_free;
        std::swap(next_taken, both_taken);
        if (!vertical) both_taken = 0;
        std::swap(both_free, here_taken);
        if (!vertical) here_taken = 0;
      }
    }
  }
  return count[0];
}

}  // namespace aztec
