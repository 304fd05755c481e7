#pragma once

#include "aztec/diamond.hpp"
#include "aztec/numeric.hpp"

#include <functional>
#include <vector>

namespace aztec {

/// Largest order accepted by the counting kernels: the frontier holds one
/// bit per column, 2n bits in all, and the dense kernel stores all 2^{2n}
/// states.
inline constexpr int max_count_order = 10;
/// Largest order accepted by enumerate_tilings (at most 2^15 tilings).
inline constexpr int max_enumerate_order = 5;

/// Number of domino tilings of `d` that cross no barrier of `cfg`.
///
/// Broken-profile DP over cells in row-major order. The frontier is a
/// 2n-bit mask: bits left of the current column mark covered cells of the
/// next row, the rest mark covered cells of the current row. Each step
/// rewrites the state array in place in independent groups of four states
/// (the two bits at the current and next column), so the groups are spread
/// over OpenMP threads without affecting the result.
///
/// Throws std::invalid_argument on a length mismatch and std::domain_error
/// when the order exceeds max_count_order.
BigCount count_tilings(const Diamond& d, const BarrierConfig& cfg);

namespace serial {

/// Reference implementation of count_tilings: the same sweep as a sparse
/// forward DP over reachable states, single-threaded. Kept for testing and
/// benchmarking the parallel kernel.
BigCount count_tilings(const Diamond& d, const BarrierConfig& cfg);

}  // namespace serial

/// Calls `visit` with every tiling compatible with `cfg`, in backtracking
/// order: the first uncovered cell in row-major order is paired with its
/// east neighbour before its north neighbour. Throws std::domain_error above
/// max_enumerate_order.
void for_each_tiling(const Diamond& d, const BarrierConfig& cfg,
                     const std::function<void(const Tiling&)>& visit);

std::vector<Tiling> enumerate_tilings(const Diamond& d, const BarrierConfig& cfg);

struct SweepRow {
  std::vector<int> chosen;  // positions carrying a zig
  BarrierConfig config;
  BigCount count;
};

/// For every subset of the even spine positions (odd positions if
/// `rotated`): zig on the subset, zag on the rest of that parity, zip on the
/// other parity, with its tiling count. Rows ordered by bitmask.
std::vector<SweepRow> barrier_sweep(int n, bool rotated);

}  // namespace aztec
