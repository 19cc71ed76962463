#pragma once

// Universe, cells, rectangular queries and translation query sets.
//
// Coordinates are zero-based; the "lower-left corner" of a query is its
// minimal-coordinate cell. All types here are immutable values.

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace sfc {

using Coord = std::int64_t;
using Rank = std::int64_t;
using Count = std::int64_t;

inline constexpr int kMaxDim = 3;

// Fixed-capacity integer vector tagged by role so that cells and extents
// cannot be mixed up.
template <class Tag>
struct GridVector {
  std::array<Coord, kMaxDim> v{};
  int dim = 0;

  constexpr GridVector() = default;
  constexpr GridVector(Coord a, Coord b) : v{a, b, 0}, dim(2) {}
  constexpr GridVector(Coord a, Coord b, Coord c) : v{a, b, c}, dim(3) {}

  static GridVector filled(int d, Coord value) {
    GridVector g;
    g.dim = d;
    for (int i = 0; i < d; ++i) g.v[i] = value;
    return g;
  }
  static GridVector from(const std::vector<Coord>& values);

  constexpr Coord operator[](int i) const { return v[i]; }
  constexpr Coord& operator[](int i) { return v[i]; }

  friend constexpr bool operator==(const GridVector&, const GridVector&) = default;
  friend constexpr auto operator<=>(const GridVector&, const GridVector&) = default;
};

using Cell = GridVector<struct CellTag>;
using Extent = GridVector<struct ExtentTag>;

std::string to_string(const Cell& c);
std::string to_string(const Extent& e);

// Square (cubic) grid [0, side)^dim. Side must be even and at least 2.
class Universe {
 public:
  Universe(int dim, Coord side);

  int dim() const { return dim_; }
  Coord side() const { return side_; }
  Count cells() const { return cells_; }
  Coord half() const { return side_ / 2; }

  bool contains(const Cell& c) const;
  // Throws std::invalid_argument naming the violated constraint.
  void check(const Cell& c) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int dim_;
  Coord side_;
  Count cells_;
};

// Axis-aligned box [origin, origin + lengths).
class RectQuery {
 public:
  RectQuery(const Universe& u, Cell origin, Extent lengths);

  const Cell& origin() const { return origin_; }
  const Extent& lengths() const { return lengths_; }
  int dim() const { return origin_.dim; }
  Count volume() const;
  bool contains(const Cell& c) const;
  // True when c is inside the query but has a grid neighbour outside it.
  bool on_shell(const Cell& c) const;

  friend bool operator==(const RectQuery&, const RectQuery&) = default;

 private:
  Cell origin_;
  Extent lengths_;
};

// All translations of a box of fixed side lengths inside a universe (Q(l1,..,ld)).
class TranslationQuerySet {
 public:
  TranslationQuerySet(const Universe& u, Extent lengths);

  const Universe& universe() const { return universe_; }
  const Extent& lengths() const { return lengths_; }
  int dim() const { return universe_.dim(); }
  // Number of feasible origins along one axis: s - l + 1.
  Coord placements(int axis) const { return universe_.side() - lengths_[axis] + 1; }
  // |Q|
  Count size() const;

  // Visits every translation, last axis varying slowest.
  void for_each(const std::function<void(const RectQuery&)>& fn) const;

 private:
  Universe universe_;
  Extent lengths_;
};

struct DirectedEdge {
  Cell from;
  Cell to;
};

// l_i = phi_i * side^mu + psi_i
struct NearCubeParams {
  double mu = 0.0;
  std::vector<double> phi;
  std::vector<double> psi;
};

// Distance of a cell to the universe boundary: min over axes of
// (x + 1, s - x). Result lies in [1, s/2].
Coord nabla(const Cell& cell, const Universe& u);

// Distance of an edge to the boundary along one (zero-based) axis:
// min over both endpoints of (x + 1, s - x).
Coord nabla_edge(const DirectedEdge& e, const Universe& u, int axis);

// Number of translations in qs that contain the cell.
Count containment_count(const TranslationQuerySet& qs, const Cell& cell);

// Number of translations in qs that contain both cells.
Count pair_containment_count(const TranslationQuerySet& qs, const Cell& a, const Cell& b);

// True when the cells differ by exactly one in exactly one coordinate.
bool grid_neighbors(const Cell& a, const Cell& b);

// |l_j - l_i| <= s / log2(s) for all pairs; reporting only.
bool is_near_cube(const Extent& lengths, Coord side);

}  // namespace sfc
