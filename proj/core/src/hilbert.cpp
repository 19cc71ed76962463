#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sfc/curves.hpp"

namespace sfc {

// J. Skilling, "Programming the Hilbert curve", AIP Conf. Proc. 707 (2004).
// The index is the bit-interleave of the transposed coordinates, most
// significant digit first, axis 0 leading within each digit. In 2D the curve
// starts at (0,0) and ends at (side-1, 0).

namespace {

using Word = std::uint64_t;
using Axes = std::array<Word, kMaxDim>;

void axes_to_transpose(Axes& x, int bits, int dim) {
  const Word top = Word{1} << (bits - 1);
  for (Word q = top; q > 1; q >>= 1) {
    const Word p = q - 1;
    for (int i = 0; i < dim; ++i) {
      if (x[i] & q) {
        x[0] ^= p;
      } else {
        const Word t = (x[0] ^ x[i]) & p;
        x[0] ^= t;
        x[i] ^= t;
      }
    }
  }
  for (int i = 1; i < dim; ++i) x[i] ^= x[i - 1];
  Word t = 0;
  for (Word q = top; q > 1; q >>= 1)
    if (x[dim - 1] & q) t ^= q - 1;
  for (int i = 0; i < dim; ++i) x[i] ^= t;
}

void transpose_to_axes(Axes& x, int bits, int dim) {
  const Word end = Word{2} << (bits - 1);
  Word t = x[dim - 1] >> 1;
  for (int i = dim - 1; i > 0; --i) x[i] ^= x[i - 1];
  x[0] ^= t;
  for (Word q = 2; q != end; q <<= 1) {
    const Word p = q - 1;
    for (int i = dim - 1; i >= 0; --i) {
      if (x[i] & q) {
        x[0] ^= p;
      } else {
        t = (x[0] ^ x[i]) & p;
        x[0] ^= t;
        x[i] ^= t;
      }
    }
  }
}

int checked_bits(Coord side) {
  if (!is_power_of_two(side) || side < 2) throw std::invalid_argument("side must be a power of two");
  return log2_exact(side);
}

}  // namespace

Rank hilbert_index(const Cell& c, Coord side) {
  const int bits = checked_bits(side);
  const int dim = c.dim;
  if (dim != 2 && dim != 3) throw std::invalid_argument("hilbert curve supports 2 or 3 dimensions");
  Axes x{};
  for (int i = 0; i < dim; ++i) {
    if (c[i] < 0 || c[i] >= side) throw std::invalid_argument("cell " + to_string(c) + " outside the grid");
    x[i] = static_cast<Word>(c[i]);
  }
  axes_to_transpose(x, bits, dim);
  Word h = 0;
  for (int b = bits - 1; b >= 0; --b)
    for (int i = 0; i < dim; ++i) h = (h << 1) | ((x[i] >> b) & 1U);
  return static_cast<Rank>(h);
}

Cell hilbert_cell(Rank r, Coord side, int dim) {
  const int bits = checked_bits(side);
  if (dim != 2 && dim != 3) throw std::invalid_argument("hilbert curve supports 2 or 3 dimensions");
  Count n = 1;
  for (int i = 0; i < dim; ++i) n *= side;
  if (r < 0 || r >= n) throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + ")");
  Axes x{};
  const Word h = static_cast<Word>(r);
  int pos = bits * dim - 1;
  for (int b = bits - 1; b >= 0; --b)
    for (int i = 0; i < dim; ++i, --pos) x[i] |= ((h >> pos) & 1U) << b;
  transpose_to_axes(x, bits, dim);
  Cell c = Cell::filled(dim, 0);
  for (int i = 0; i < dim; ++i) c[i] = static_cast<Coord>(x[i]);
  return c;
}

}  // namespace sfc
