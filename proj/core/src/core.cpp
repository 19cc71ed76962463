#include "sfc/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

std::string join(const std::array<Coord, kMaxDim>& v, int dim) {
  std::string out;
  for (int i = 0; i < dim; ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Feasible origins along one axis for a box of length l that contains x.
struct OriginRange {
  Coord lo;
  Coord hi;
};

OriginRange origins_containing(Coord x, Coord l, Coord side) {
  return {std::max<Coord>(0, x - l + 1), std::min<Coord>(x, side - l)};
}

}  // namespace

template <class Tag>
GridVector<Tag> GridVector<Tag>::from(const std::vector<Coord>& values) {
  if (values.size() < 2 || values.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("expected 2 or 3 coordinates, got " + std::to_string(values.size()));
  GridVector g;
  g.dim = static_cast<int>(values.size());
  std::copy(values.begin(), values.end(), g.v.begin());
  return g;
}

template struct GridVector<CellTag>;
template struct GridVector<ExtentTag>;

std::string to_string(const Cell& c) { return join(c.v, c.dim); }
std::string to_string(const Extent& e) { return join(e.v, e.dim); }

Universe::Universe(int dim, Coord side) : dim_(dim), side_(side), cells_(1) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (side < 2) throw std::invalid_argument("side must be at least 2");
  if (side % 2 != 0) throw std::invalid_argument("side must be even");
  for (int i = 0; i < dim; ++i) {
    if (cells_ > std::numeric_limits<Count>::max() / side)
      throw std::invalid_argument("universe exceeds 2^63-1 cells");
    cells_ *= side;
  }
}

bool Universe::contains(const Cell& c) const {
  if (c.dim != dim_) return false;
  for (int i = 0; i < dim_; ++i)
    if (c[i] < 0 || c[i] >= side_) return false;
  return true;
}

void Universe::check(const Cell& c) const {
  if (c.dim != dim_)
    throw std::invalid_argument("cell has " + std::to_string(c.dim) + " coordinates, universe is " +
                                std::to_string(dim_) + "-dimensional");
  for (int i = 0; i < dim_; ++i)
    if (c[i] < 0 || c[i] >= side_)
      throw std::invalid_argument("cell coordinate " + std::to_string(c[i]) + " outside [0, " +
                                  std::to_string(side_) + ")");
}

RectQuery::RectQuery(const Universe& u, Cell origin, Extent lengths)
    : origin_(origin), lengths_(lengths) {
  u.check(origin);
  if (lengths.dim != u.dim()) throw std::invalid_argument("query lengths do not match universe dimension");
  for (int i = 0; i < u.dim(); ++i) {
    if (lengths[i] < 1 || lengths[i] > u.side())
      throw std::invalid_argument("query length " + std::to_string(lengths[i]) + " outside [1, " +
                                  std::to_string(u.side()) + "]");
    if (origin[i] + lengths[i] > u.side())
      throw std::invalid_argument("query extends past the universe boundary on axis " + std::to_string(i));
  }
}

Count RectQuery::volume() const {
  Count v = 1;
  for (int i = 0; i < dim(); ++i) v *= lengths_[i];
  return v;
}

bool RectQuery::contains(const Cell& c) const {
  for (int i = 0; i < dim(); ++i)
    if (c[i] < origin_[i] || c[i] >= origin_[i] + lengths_[i]) return false;
  return true;
}

bool RectQuery::on_shell(const Cell& c) const {
  if (!contains(c)) return false;
  for (int i = 0; i < dim(); ++i)
    if (c[i] == origin_[i] || c[i] == origin_[i] + lengths_[i] - 1) return true;
  return false;
}

TranslationQuerySet::TranslationQuerySet(const Universe& u, Extent lengths)
    : universe_(u), lengths_(lengths) {
  if (lengths.dim != u.dim()) throw std::invalid_argument("query lengths do not match universe dimension");
  for (int i = 0; i < u.dim(); ++i)
    if (lengths[i] < 1 || lengths[i] > u.side())
      throw std::invalid_argument("query length " + std::to_string(lengths[i]) + " outside [1, " +
                                  std::to_string(u.side()) + "]");
}

Count TranslationQuerySet::size() const {
  Count n = 1;
  for (int i = 0; i < dim(); ++i) n *= placements(i);
  return n;
}

void TranslationQuerySet::for_each(const std::function<void(const RectQuery&)>& fn) const {
  const int d = dim();
  Cell origin = Cell::filled(d, 0);
  while (true) {
    fn(RectQuery(universe_, origin, lengths_));
    int axis = 0;
    while (axis < d) {
      if (++origin[axis] < placements(axis)) break;
      origin[axis] = 0;
      ++axis;
    }
    if (axis == d) return;
  }
}

Coord nabla(const Cell& cell, const Universe& u) {
  u.check(cell);
  Coord best = u.side();
  for (int i = 0; i < u.dim(); ++i) best = std::min({best, cell[i] + 1, u.side() - cell[i]});
  return best;
}

Coord nabla_edge(const DirectedEdge& e, const Universe& u, int axis) {
  u.check(e.from);
  u.check(e.to);
  if (axis < 0 || axis >= u.dim()) throw std::invalid_argument("axis out of range");
  const Coord s = u.side();
  return std::min({e.from[axis] + 1, s - e.from[axis], e.to[axis] + 1, s - e.to[axis]});
}

Count containment_count(const TranslationQuerySet& qs, const Cell& cell) {
  const Universe& u = qs.universe();
  u.check(cell);
  Count total = 1;
  for (int i = 0; i < u.dim(); ++i) {
    const Coord l = qs.lengths()[i];
    total *= std::min({cell[i] + 1, l, u.side() - l + 1, u.side() - cell[i]});
  }
  return total;
}

Count pair_containment_count(const TranslationQuerySet& qs, const Cell& a, const Cell& b) {
  const Universe& u = qs.universe();
  u.check(a);
  u.check(b);
  Count total = 1;
  for (int i = 0; i < u.dim(); ++i) {
    const Coord l = qs.lengths()[i];
    const OriginRange ra = origins_containing(a[i], l, u.side());
    const OriginRange rb = origins_containing(b[i], l, u.side());
    const Coord width = std::min(ra.hi, rb.hi) - std::max(ra.lo, rb.lo) + 1;
    if (width <= 0) return 0;
    total *= width;
  }
  return total;
}

bool grid_neighbors(const Cell& a, const Cell& b) {
  if (a.dim != b.dim) return false;
  Coord manhattan = 0;
  for (int i = 0; i < a.dim; ++i) manhattan += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return manhattan == 1;
}

bool is_near_cube(const Extent& lengths, Coord side) {
  const double limit = static_cast<double>(side) / std::log2(static_cast<double>(side));
  for (int i = 0; i < lengths.dim; ++i)
    for (int j = i + 1; j < lengths.dim; ++j)
      if (static_cast<double>(std::abs(lengths[i] - lengths[j])) > limit) return false;
  return true;
}

}  // namespace sfc
