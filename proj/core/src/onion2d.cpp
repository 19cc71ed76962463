#include <algorithm>
#include <stdexcept>
#include <string>

#include "sfc/curves.hpp"

namespace sfc {

namespace {

void check_side(Coord side) {
  if (side < 2 || side % 2 != 0) throw std::invalid_argument("onion curve requires an even side >= 2");
}

}  // namespace

Count onion2d_layer_offset(Coord t, Coord side) {
  // sum_{u=1}^{t-1} (4(side - 2u + 2) - 4)
  return (t - 1) * (4 * side + 4 - 4 * t);
}

Rank onion2d_index(const Cell& c, Coord side) {
  check_side(side);
  if (c.dim != 2) throw std::invalid_argument("onion2d expects a 2D cell");
  const Coord x = c[0], y = c[1];
  if (x < 0 || y < 0 || x >= side || y >= side)
    throw std::invalid_argument("cell " + to_string(c) + " outside the " + std::to_string(side) + "x" +
                                std::to_string(side) + " grid");
  const Coord t = std::min({x + 1, side - x, y + 1, side - y});
  const Coord lx = x - (t - 1), ly = y - (t - 1);
  const Coord j = side - 2 * (t - 1);
  Rank local;
  if (ly == 0)
    local = lx;
  else if (lx == j - 1)
    local = j - 1 + ly;
  else if (ly == j - 1)
    local = 3 * j - 3 - lx;
  else
    local = 4 * j - 4 - ly;
  return onion2d_layer_offset(t, side) + local;
}

Cell onion2d_cell(Rank r, Coord side) {
  check_side(side);
  if (r < 0 || r >= side * side)
    throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(side * side) + ")");
  // Largest layer t in [1, side/2] whose offset does not exceed r.
  Coord lo = 1, hi = side / 2;
  while (lo < hi) {
    const Coord mid = (lo + hi + 1) / 2;
    if (onion2d_layer_offset(mid, side) <= r)
      lo = mid;
    else
      hi = mid - 1;
  }
  const Coord t = lo;
  const Rank q = r - onion2d_layer_offset(t, side);
  const Coord j = side - 2 * (t - 1);
  Coord lx, ly;
  if (q < j) {
    lx = q;
    ly = 0;
  } else if (q < 2 * j - 1) {
    lx = j - 1;
    ly = q - (j - 1);
  } else if (q < 3 * j - 2) {
    lx = 3 * j - 3 - q;
    ly = j - 1;
  } else {
    lx = 0;
    ly = 4 * j - 4 - q;
  }
  return Cell(lx + t - 1, ly + t - 1);
}

}  // namespace sfc
