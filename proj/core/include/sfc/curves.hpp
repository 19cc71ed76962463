#pragma once

// Space-filling curve catalogue: onion (2D/3D), Hilbert (2D/3D), Z-order
// (2D/3D), Gray-code (2D), row-major and column-major (2D).
//
// Every curve is a bijection between the cells of a Universe and the ranks
// [0, n). `index` maps a cell to its rank, `cell_at` inverts it.

#include <optional>
#include <string_view>
#include <vector>

#include "sfc/core.hpp"

namespace sfc {

enum class CurveKind { onion2d, onion3d, hilbert2d, hilbert3d, z2d, z3d, gray2d, rowmajor, colmajor };

std::string_view to_string(CurveKind kind);
std::optional<CurveKind> parse_curve_kind(std::string_view name);
// All kinds, in declaration order.
const std::vector<CurveKind>& all_curve_kinds();
int curve_dimension(CurveKind kind);

// Returns an empty string when the curve supports the universe, otherwise the
// violated constraint ("side must be a power of two", ...).
std::string support_error(CurveKind kind, const Universe& u);
inline bool supports(CurveKind kind, const Universe& u) { return support_error(kind, u).empty(); }

class Curve {
 public:
  // Throws std::invalid_argument when the curve does not support the universe.
  Curve(CurveKind kind, const Universe& u);

  CurveKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }
  const Universe& universe() const { return universe_; }

  Rank index(const Cell& c) const;
  Cell cell_at(Rank r) const;

  Cell first() const { return cell_at(0); }
  Cell last() const { return cell_at(universe_.cells() - 1); }

  // True when consecutive cells along the curve are always grid neighbours.
  bool continuous() const;

  // Ranks r >= 1 whose predecessor cell(r-1) is not a grid neighbour of
  // cell(r), when the curve has few of them (continuous curves: empty).
  // Returns nullopt for curves where such breaks are dense (Z, Gray).
  const std::optional<std::vector<Rank>>& sparse_breaks() const { return breaks_; }

 private:
  CurveKind kind_;
  Universe universe_;
  int bits_ = 0;
  std::optional<std::vector<Rank>> breaks_;
};

// Onion curve, two dimensions. Layers S(1), S(2), ... are enumerated
// outermost first; each layer ring starts at its lower-left cell and runs
// along x, up the right column, back along the top row and down the left
// column.
Rank onion2d_index(const Cell& c, Coord side);
Cell onion2d_cell(Rank r, Coord side);
// Number of cells in layers 1..t-1 of a side x side grid.
Count onion2d_layer_offset(Coord t, Coord side);

// (t', g', r'): layer (1-based), part within the layer (1..10), rank within
// the part.
struct OnionKey {
  Coord layer = 0;
  int part = 0;
  Rank offset = 0;

  friend bool operator==(const OnionKey&, const OnionKey&) = default;
};

// Cells in layers 1..t-1 of the 3D grid with half-side m (K1).
Count onion3d_layer_offset(Coord t, Coord half);
// Size of part g (1..10) of layer t (V_t(g)).
Count onion3d_part_size(Coord t, int part, Coord half);
OnionKey onion3d_key(const Cell& c, Coord side);
Rank onion3d_index(const Cell& c, Coord side);
Cell onion3d_cell(Rank r, Coord side);
// Ranks where part g of layer t begins, for every non-empty part.
std::vector<Rank> onion3d_part_starts(Coord side);

// Hilbert curve via Skilling's transpose algorithm; `side` must be a power
// of two. Coordinate 0 is the most significant axis of each digit.
Rank hilbert_index(const Cell& c, Coord side);
Cell hilbert_cell(Rank r, Coord side, int dim);

// Bit interleave with coordinate 0 in the least significant position.
Rank z_index(const Cell& c, Coord side);
Cell z_cell(Rank r, Coord side, int dim);

// Z interleave followed by binary-reflected Gray decoding of the word.
Rank gray_index(const Cell& c, Coord side);
Cell gray_cell(Rank r, Coord side, int dim);

Rank rowmajor_index(const Cell& c, Coord side);
Cell rowmajor_cell(Rank r, Coord side);
Rank colmajor_index(const Cell& c, Coord side);
Cell colmajor_cell(Rank r, Coord side);

bool is_power_of_two(Coord v);
int log2_exact(Coord v);

}  // namespace sfc
