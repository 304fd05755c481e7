#include "board.hpp"

namespace aztec::detail {

Board::Board(const Diamond& d, const BarrierConfig& cfg) : width(d.width()), height(d.width()) {
  const auto blocked = blocked_edges(d, cfg);
  const int lo = d.min_coord();
  const std::size_t cells = static_cast<std::size_t>(width) * height;
  inside.assign(cells, 0);
  north_open.assign(cells, 0);
  east_open.assign(cells, 0);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) inside[at(r, c)] = d.contains({c + lo, r + lo});
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (!inside[at(r, c)]) continue;
      const Cell here{c + lo, r + lo};
      if (in(r + 1, c))
        north_open[at(r, c)] = !blocked.contains(make_pair_sorted(here, {here.i, here.j + 1}));
      if (in(r, c + 1))
        east_open[at(r, c)] = !blocked.contains(make_pair_sorted(here, {here.i + 1, here.j}));
    }
  }
}

}  // namespace aztec::detail
