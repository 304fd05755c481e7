#include "aztec/count.hpp"
#include "board.hpp"

#include <algorithm>
#include <stdexcept>

namespace aztec {

namespace {

class Backtracker {
 public:
  Backtracker(const detail::Board& board, int lo, const std::function<void(const Tiling&)>& visit)
      : board_(board), lo_(lo), visit_(visit), covered_(board.inside.size(), 0) {
    for (std::size_t idx = 0; idx < board.inside.size(); ++idx)
      if (!board.inside[idx]) covered_[idx] = 1;
  }

  void run() { place(0); }

 private:
  void place(int from) {
    const int total = static_cast<int>(covered_.size());
    while (from < total && covered_[from]) ++from;
    if (from == total) {
      Tiling t = dominoes_;
      std::sort(t.begin(), t.end());
      visit_(t);
      return;
    }
    const int r = from / board_.width;
    const int c = from % board_.width;
    const Cell here{c + lo_, r + lo_};
    if (board_.east_open[from] && !covered_[from + 1]) {
      cover(from, from + 1, make_pair_sorted(here, {here.i + 1, here.j}));
      place(from + 1);
      uncover(from, from + 1);
    }
    if (board_.north_open[from] && !covered_[from + board_.width]) {
      cover(from, from + board_.width, make_pair_sorted(here, {here.i, here.j + 1}));
      place(from + 1);
      uncover(from, from + board_.width);
    }
  }

  void cover(int a, int b, CellPair domino) {
    covered_[a] = covered_[b] = 1;
    dominoes_.push_back(domino);
  }

  void uncover(int a, int b) {
    covered_[a] = covered_[b] = 0;
    dominoes_.pop_back();
  }

  const detail::Board& board_;
  int lo_;
  const std::function<void(const Tiling&)>& visit_;
  std::vector<char> covered_;
  Tiling dominoes_;
};

}  // namespace

void for_each_tiling(const Diamond& d, const BarrierConfig& cfg, const std::function<void(const Tiling&)>& visit) {
  if (d.order() > max_enumerate_order)
    throw std::domain_error("enumerate_tilings: order " + std::to_string(d.order()) + " exceeds the ceiling " +
                            std::to_string(max_enumerate_order));
  const detail::Board board(d, cfg);
  Backtracker(board, d.min_coord(), visit).run();
}

std::vector<Tiling> enumerate_tilings(const Diamond& d, const BarrierConfig& cfg) {
  std::vector<Tiling> out;
  for_each_tiling(d, cfg, [&](const Tiling& t) { out.push_back(t); });
  return out;
}

std::vector<SweepRow> barrier_sweep(int n, bool rotated) {
  const Diamond d(n);
  const int k = d.k();
  const int first = rotated ? 1 : 2;
  std::vector<SweepRow> rows;
  rows.reserve(std::size_t{1} << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<Mark> marks(2 * k, Mark::Zip);
    std::vector<int> chosen;
    for (int b = 0; b < k; ++b) {
      const int pos = first + 2 * b;
      const bool zig = mask & (1u << b);
      marks[pos - 1] = zig ? Mark::Zig : Mark::Zag;
      if (zig) chosen.push_back(pos);
    }
    BarrierConfig cfg(std::move(marks));
    BigCount count = count_tilings(d, cfg);
    rows.push_back({std::move(chosen), std::move(cfg), std::move(count)});
  }
  return rows;
}

}  // namespace aztec
