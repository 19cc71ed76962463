#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "sfc/curves.hpp"

namespace sfc {

// Layer t of a 3D grid with half-side m covers coordinates [t-1, 2m-t]. With
// lo = t-1 and hi = 2m-t it splits into ten parts:
//   1: i = lo                    2: i = hi            (faces over (j, k))
//   3: j = lo, k = lo            5: j = lo, k = hi    (lines along i)
//   4: j = lo, k interior                             (plane over (i, k))
//   6: j = hi, k = lo            8: j = hi, k = hi    (lines along i)
//   7: j = hi, k interior                             (plane over (i, k))
//   9: k = lo                   10: k = hi            (planes over (i, j))
// where i is interior for parts 3..10 and j is interior for parts 9, 10.
// Lines run by increasing i; squares follow the 2D onion order on the
// in-plane coordinates (first listed coordinate as x).

namespace {

void check_side(Coord side) {
  if (side < 2 || side % 2 != 0) throw std::invalid_argument("onion curve requires an even side >= 2");
}

enum class Shape { face, line, plane };

Shape part_shape(int g) {
  switch (g) {
    case 1:
    case 2:
      return Shape::face;
    case 3:
    case 5:
    case 6:
    case 8:
      return Shape::line;
    default:
      return Shape::plane;
  }
}

Count prefix_parts(Coord t, int part, Coord half) {
  Count total = 0;
  for (int g = 1; g < part; ++g) total += onion3d_part_size(t, g, half);
  return total;
}

}  // namespace

Count onion3d_layer_offset(Coord t, Coord half) {
  const Coord u = t - 1;
  return 24 * half * half * u - 24 * half * u * u + 8 * u * u * u;
}

Count onion3d_part_size(Coord t, int part, Coord half) {
  const Coord inner = 2 * half - 2 * t;
  switch (part_shape(part)) {
    case Shape::face:
      return (inner + 2) * (inner + 2);
    case Shape::line:
      return inner;
    case Shape::plane:
      return inner * inner;
  }
  return 0;
}

OnionKey onion3d_key(const Cell& c, Coord side) {
  check_side(side);
  if (c.dim != 3) throw std::invalid_argument("onion3d expects a 3D cell");
  for (int a = 0; a < 3; ++a)
    if (c[a] < 0 || c[a] >= side)
      throw std::invalid_argument("cell " + to_string(c) + " outside the " + std::to_string(side) + "^3 grid");
  const Coord i = c[0], j = c[1], k = c[2];
  const Coord t = std::min({i + 1, side - i, j + 1, side - j, k + 1, side - k});
  const Coord lo = t - 1, hi = side - t;
  const Coord face = hi - lo + 1;
  const Coord inner = face - 2;

  OnionKey key;
  key.layer = t;
  if (i == lo) {
    key.part = 1;
    key.offset = onion2d_index(Cell(j - lo, k - lo), face);
  } else if (i == hi) {
    key.part = 2;
    key.offset = onion2d_index(Cell(j - lo, k - lo), face);
  } else if (j == lo || j == hi) {
    const bool low = j == lo;
    if (k == lo) {
      key.part = low ? 3 : 6;
      key.offset = i - t;
    } else if (k == hi) {
      key.part = low ? 5 : 8;
      key.offset = i - t;
    } else {
      key.part = low ? 4 : 7;
      key.offset = onion2d_index(Cell(i - t, k - t), inner);
    }
  } else {
    key.part = k == lo ? 9 : 10;
    key.offset = onion2d_index(Cell(i - t, j - t), inner);
  }
  return key;
}

Rank onion3d_index(const Cell& c, Coord side) {
  const OnionKey key = onion3d_key(c, side);
  const Coord half = side / 2;
  return onion3d_layer_offset(key.layer, half) + prefix_parts(key.layer, key.part, half) + key.offset;
}

Cell onion3d_cell(Rank r, Coord side) {
  check_side(side);
  const Coord half = side / 2;
  const Count n = side * side * side;
  if (r < 0 || r >= n) throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + ")");

  Coord lo_t = 1, hi_t = half;
  while (lo_t < hi_t) {
    const Coord mid = (lo_t + hi_t + 1) / 2;
    if (onion3d_layer_offset(mid, half) <= r)
      lo_t = mid;
    else
      hi_t = mid - 1;
  }
  const Coord t = lo_t;
  Rank q = r - onion3d_layer_offset(t, half);
  int g = 1;
  while (q >= onion3d_part_size(t, g, half)) {
    q -= onion3d_part_size(t, g, half);
    ++g;
  }

  const Coord lo = t - 1, hi = side - t;
  const Coord face = hi - lo + 1;
  const Coord inner = face - 2;
  switch (g) {
    case 1:
    case 2: {
      const Cell p = onion2d_cell(q, face);
      return Cell(g == 1 ? lo : hi, p[0] + lo, p[1] + lo);
    }
    case 3:
      return Cell(t + q, lo, lo);
    case 5:
      return Cell(t + q, lo, hi);
    case 6:
      return Cell(t + q, hi, lo);
    case 8:
      return Cell(t + q, hi, hi);
    case 4:
    case 7: {
      const Cell p = onion2d_cell(q, inner);
      return Cell(p[0] + t, g == 4 ? lo : hi, p[1] + t);
    }
    default: {
      const Cell p = onion2d_cell(q, inner);
      return Cell(p[0] + t, p[1] + t, g == 9 ? lo : hi);
    }
  }
}

std::vector<Rank> onion3d_part_starts(Coord side) {
  check_side(side);
  const Coord half = side / 2;
  std::vector<Rank> starts;
  for (Coord t = 1; t <= half; ++t) {
    Rank at = onion3d_layer_offset(t, half);
    for (int g = 1; g <= 10; ++g) {
      const Count size = onion3d_part_size(t, g, half);
      if (size > 0) starts.push_back(at);
      at += size;
    }
  }
  return starts;
}

}  // namespace sfc
