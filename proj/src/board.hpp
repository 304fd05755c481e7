#pragma once

#include "aztec/diamond.hpp"

#include <vector>

namespace aztec::detail {

// The diamond and its barriers rasterized on the 2n x 2n bounding box.
// Row r is j = r - n, column c is i = c - n.
struct Board {
  int width = 0;
  int height = 0;
  std::vector<char> inside;
  std::vector<char> north_open;  // domino (r, c)-(r+1, c) allowed
  std::vector<char> east_open;   // domino (r, c)-(r, c+1) allowed

  Board(const Diamond& d, const BarrierConfig& cfg);

  int at(int r, int c) const { return r * width + c; }
  bool in(int r, int c) const { return r >= 0 && r < height && c >= 0 && c < width && inside[at(r, c)]; }
};

}  // namespace aztec::detail
