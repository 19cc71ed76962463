#include "sfc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc::oracle {

namespace {

// All origins, enumerated last axis fastest (the reverse of the production
// enumeration order).
std::vector<Cell> origins(const TranslationQuerySet& qs) {
  const Universe& u = qs.universe();
  const int d = u.dim();
  std::vector<Cell> out;
  Cell o = Cell::filled(d, 0);
  while (true) {
    out.push_back(o);
    int a = d - 1;
    while (a >= 0) {
      if (o[a] + qs.lengths()[a] < u.side()) {
        ++o[a];
        break;
      }
      o[a] = 0;
      --a;
    }
    if (a < 0) return out;
  }
}

bool inside(const Cell& origin, const Extent& lengths, const Cell& c) {
  for (int a = 0; a < c.dim; ++a)
    if (c[a] < origin[a] || c[a] - origin[a] >= lengths[a]) return false;
  return true;
}

void guard_translations(const TranslationQuerySet& qs) {
  if (qs.size() > kMaxTranslations)
    throw std::length_error("oracle limited to 10^6 translations, got " + std::to_string(qs.size()));
}

std::vector<Cell> all_cells(const Universe& u) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(u.cells()));
  Cell c = Cell::filled(u.dim(), 0);
  for (Count k = 0; k < u.cells(); ++k) {
    Count rest = k;
    for (int a = 0; a < u.dim(); ++a) {
      c[a] = rest % u.side();
      rest /= u.side();
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

Count containment_brute(const TranslationQuerySet& qs, const Cell& cell) {
  guard_translations(qs);
  Count n = 0;
  for (const Cell& o : origins(qs))
    if (inside(o, qs.lengths(), cell)) ++n;
  return n;
}

Count pair_containment_brute(const TranslationQuerySet& qs, const Cell& a, const Cell& b) {
  guard_translations(qs);
  Count n = 0;
  for (const Cell& o : origins(qs))
    if (inside(o, qs.lengths(), a) && inside(o, qs.lengths(), b)) ++n;
  return n;
}

Count gamma_edge_brute(const TranslationQuerySet& qs, const DirectedEdge& e) {
  guard_translations(qs);
  Count entering = 0, leaving = 0;
  for (const Cell& o : origins(qs)) {
    const bool from_in = inside(o, qs.lengths(), e.from);
    const bool to_in = inside(o, qs.lengths(), e.to);
    if (!from_in && to_in) ++entering;
    if (from_in && !to_in) ++leaving;
  }
  return entering + leaving;
}

Count lambda_brute(const TranslationQuerySet& qs, const Cell& cell) {
  const Universe& u = qs.universe();
  Count best = std::numeric_limits<Count>::max();
  for (const Cell& other : all_cells(u)) {
    Coord dist = 0;
    for (int a = 0; a < u.dim(); ++a) dist += std::abs(other[a] - cell[a]);
    if (dist == 1) best = std::min(best, gamma_edge_brute(qs, {cell, other}));
  }
  return best;
}

Count omega_brute(const TranslationQuerySet& qs, const Cell& cell) {
  if (qs.universe().side() > kMaxOmegaSide) throw std::length_error("omega oracle limited to s <= 16");
  Count best = std::numeric_limits<Count>::max();
  for (const Cell& other : all_cells(qs.universe()))
    if (!(other == cell)) best = std::min(best, gamma_edge_brute(qs, {cell, other}));
  return best;
}

Count t_sum_brute(const TranslationQuerySet& qs) {
  guard_translations(qs);
  if (qs.universe().cells() * qs.size() > kMaxWork) throw std::length_error("T oracle work exceeds 10^9");
  Count total = 0;
  for (const Cell& c : all_cells(qs.universe())) total += lambda_brute(qs, c);
  return total;
}

Rational avg_clustering_oracle(const Curve& curve, const TranslationQuerySet& qs) {
  Count volume = 1;
  for (int a = 0; a < qs.dim(); ++a) volume *= qs.lengths()[a];
  if (qs.size() > kMaxWork / volume) throw std::length_error("oracle work |Q|*|q| exceeds 10^9");
  Count starts = 0;
  for (const Cell& o : origins(qs)) {
    // Walk the cells of this translation by offset, last axis fastest.
    Cell off = Cell::filled(qs.dim(), 0);
    for (Count k = 0; k < volume; ++k) {
      Count rest = k;
      Cell c = o;
      for (int a = qs.dim() - 1; a >= 0; --a) {
        off[a] = rest % qs.lengths()[a];
        rest /= qs.lengths()[a];
        c[a] = o[a] + off[a];
      }
      const Rank r = curve.index(c);
      if (r == 0 || !inside(o, qs.lengths(), curve.cell_at(r - 1))) ++starts;
    }
  }
  return Rational(starts, qs.size());
}

}  // namespace sfc::oracle
