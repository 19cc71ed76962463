#include <cstdint>
#include <stdexcept>
#include <string>

#include "sfc/curves.hpp"

namespace sfc {

namespace {

using Word = std::uint64_t;

int checked_bits(Coord side) {
  if (!is_power_of_two(side) || side < 2) throw std::invalid_argument("side must be a power of two");
  return log2_exact(side);
}

void check_cell(const Cell& c, Coord side) {
  for (int i = 0; i < c.dim; ++i)
    if (c[i] < 0 || c[i] >= side) throw std::invalid_argument("cell " + to_string(c) + " outside the grid");
}

Count cell_count(Coord side, int dim) {
  Count n = 1;
  for (int i = 0; i < dim; ++i) n *= side;
  return n;
}

void check_rank(Rank r, Count n) {
  if (r < 0 || r >= n) throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + ")");
}

Word interleave(const Cell& c, int bits) {
  Word z = 0;
  for (int b = 0; b < bits; ++b)
    for (int i = 0; i < c.dim; ++i) z |= ((static_cast<Word>(c[i]) >> b) & 1U) << (b * c.dim + i);
  return z;
}

Cell deinterleave(Word z, int bits, int dim) {
  Cell c = Cell::filled(dim, 0);
  for (int b = 0; b < bits; ++b)
    for (int i = 0; i < dim; ++i) c[i] |= static_cast<Coord>((z >> (b * dim + i)) & 1U) << b;
  return c;
}

// Prefix XOR from the top bit down: inverse of g = b ^ (b >> 1).
Word gray_decode(Word g) {
  for (Word shift = 1; shift < 64; shift <<= 1) g ^= g >> shift;
  return g;
}

}  // namespace

bool is_power_of_two(Coord v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(Coord v) {
  int bits = 0;
  while ((Coord{1} << bits) < v) ++bits;
  return bits;
}

Rank z_index(const Cell& c, Coord side) {
  const int bits = checked_bits(side);
  check_cell(c, side);
  return static_cast<Rank>(interleave(c, bits));
}

Cell z_cell(Rank r, Coord side, int dim) {
  const int bits = checked_bits(side);
  check_rank(r, cell_count(side, dim));
  return deinterleave(static_cast<Word>(r), bits, dim);
}

Rank gray_index(const Cell& c, Coord side) {
  const int bits = checked_bits(side);
  check_cell(c, side);
  return static_cast<Rank>(gray_decode(interleave(c, bits)));
}

Cell gray_cell(Rank r, Coord side, int dim) {
  const int bits = checked_bits(side);
  check_rank(r, cell_count(side, dim));
  const Word w = static_cast<Word>(r);
  return deinterleave(w ^ (w >> 1), bits, dim);
}

Rank rowmajor_index(const Cell& c, Coord side) {
  check_cell(c, side);
  return c[1] * side + c[0];
}

Cell rowmajor_cell(Rank r, Coord side) {
  check_rank(r, side * side);
  return Cell(r % side, r / side);
}

Rank colmajor_index(const Cell& c, Coord side) {
  check_cell(c, side);
  return c[0] * side + c[1];
}

Cell colmajor_cell(Rank r, Coord side) {
  check_rank(r, side * side);
  return Cell(r / side, r % side);
}

}  // namespace sfc
