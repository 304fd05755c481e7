#include "aztec/count.hpp"
#include "board.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace aztec::serial {

BigCount count_tilings(const Diamond& d, const BarrierConfig& cfg) {
  if (d.order() > max_count_order) throw std::domain_error("count_tilings: order exceeds the ceiling");
  const detail::Board board(d, cfg);
  const int w = board.width;

  std::unordered_map<std::uint64_t, BigCount> cur{{0, 1}}, nxt;
  for (int r = 0; r < board.height; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::uint64_t here = std::uint64_t{1} << c;
      const std::uint64_t next = here << 1;
      const bool inside = board.inside[board.at(r, c)];
      const bool vertical = inside && board.north_open[board.at(r, c)];
      const bool horizontal = inside && c + 1 < w && board.east_open[board.at(r, c)];
      nxt.clear();
      for (const auto& [s, ways] : cur) {
        if (!inside) {
          if (!(s & here)) nxt[s] += ways;
          continue;
        }
        if (s & here) {
          nxt[s & ~here] += ways;
          continue;
        }
        if (vertical) nxt[s | here] += ways;
        if (horizontal && !(s & next)) nxt[s | next] += ways;
      }
      std::swap(cur, nxt);
    }
  }
  const auto it = cur.find(0);
  return it == cur.end() ? BigCount(0) : it->second;
}

}  // namespace aztec::serial
