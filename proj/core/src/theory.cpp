#include "sfc/theory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

Rational R(Count num, Count den = 1) { return Rational(num, den); }

void check_lengths(Coord l1, Coord l2, Coord side) {
  if (side < 2 || side % 2 != 0) throw std::invalid_argument("side must be even and at least 2");
  for (Coord l : {l1, l2})
    if (l < 1 || l > side)
      throw std::invalid_argument("query length " + std::to_string(l) + " outside [1, " + std::to_string(side) + "]");
}

Coord fold(Coord x, Coord side) { return std::min(x, side - 1 - x); }

template <class Gamma>
Count min_over_neighbors(const Universe& u, const Cell& cell, Gamma gamma) {
  u.check(cell);
  Count best = std::numeric_limits<Count>::max();
  for (int a = 0; a < u.dim(); ++a) {
    for (Coord step : {Coord{-1}, Coord{1}}) {
      Cell other = cell;
      other[a] += step;
      if (other[a] < 0 || other[a] >= u.side()) continue;
      best = std::min(best, gamma(DirectedEdge{cell, other}));
    }
  }
  return best;
}

template <class Gamma>
Count min_over_cells(const Universe& u, const Cell& cell, Gamma gamma) {
  u.check(cell);
  Count best = std::numeric_limits<Count>::max();
  Cell other = Cell::filled(u.dim(), 0);
  while (true) {
    if (!(other == cell)) best = std::min(best, gamma(DirectedEdge{cell, other}));
    int a = 0;
    while (a < u.dim()) {
      if (++other[a] < u.side()) break;
      other[a] = 0;
      ++a;
    }
    if (a == u.dim()) return best;
  }
}

const Universe& family_universe(const std::vector<TranslationQuerySet>& family) {
  if (family.empty()) throw std::invalid_argument("empty query set family");
  for (const auto& qs : family)
    if (!(qs.universe() == family.front().universe()))
      throw std::invalid_argument("query sets in a family must share one universe");
  return family.front().universe();
}

template <class Fn>
void for_each_cell(const Universe& u, Fn fn) {
  Cell c = Cell::filled(u.dim(), 0);
  while (true) {
    fn(c);
    int a = 0;
    while (a < u.dim()) {
      if (++c[a] < u.side()) break;
      c[a] = 0;
      ++a;
    }
    if (a == u.dim()) return;
  }
}

}  // namespace

std::string_view to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::exact_with_eps:
      return "exact_with_eps";
    case FormulaKind::leading_order:
      return "leading_order";
    case FormulaKind::upper_bound:
      return "upper_bound";
  }
  return "unknown";
}

FormulaValue thm1_onion2d(Coord l1, Coord l2, Coord side) {
  check_lengths(l1, l2, side);
  FormulaValue out;
  if (l1 > l2) {
    std::swap(l1, l2);
    out.swapped = true;
  }
  const Coord m = side / 2;
  const Coord L1 = side - l1 + 1, L2 = side - l2 + 1;
  if (l2 <= m) {
    const Rational bracket = R(2, 3) * R(l2 * l2 * l2) - R(7, 2) * R(l1 * l2 * l2) + R(5, 2) * R(l1 * l1 * l2) -
                             R(m * (l2 - l1) * (l2 - 3 * l1));
    out.value = R(l1 + l2, 2) + bracket / R(L1 * L2);
    out.slack = R(5);
    out.label = "l2<=m";
  } else if (l1 > m) {
    out.value = R(L1 - L2) + R(2, 3) * R(L2 * L2) / R(L1);
    out.slack = R(2);
    out.label = "l1>m";
  } else {
    out.value = R(2 * m, 3);
    out.slack = R(0);
    out.kind = FormulaKind::leading_order;
    out.label = "mixed";
  }
  return out;
}

EdgeSums onion_edge_sums(Coord l1, Coord l2, Coord side) {
  check_lengths(l1, l2, side);
  const Universe u(2, side);
  const TranslationQuerySet qs(u, Extent(l1, l2));
  EdgeSums sums;
  Cell prev = onion2d_cell(0, side);
  for (Rank r = 1; r < u.cells(); ++r) {
    const Cell next = onion2d_cell(r, side);
    const Count g = gamma_edge(qs, {prev, next});
    if (nabla(prev, u) != nabla(next, u))
      sums.s3 += g;
    else if (prev[0] != next[0])
      sums.s1 += g;
    else
      sums.s2 += g;
    prev = next;
  }
  for (Coord t = 1; t <= u.half(); ++t) {
    const Count g = gamma_edge(qs, {Cell(t - 1, t), Cell(t - 1, t - 1)});
    sums.s2 += g;
    sums.s3 -= g;
  }
  return sums;
}

Coord tau(Coord k, Coord l, Coord side) { return std::min({k + 1, l, side + 1 - l}); }

Coord h1(Coord t, Coord l) { return t <= l - 1 ? 1 : 2; }

Coord h2(Coord t, Coord l, Coord side) { return t <= side - l ? 1 : 0; }

Count lambda_cell(Coord l1, Coord l2, const Cell& cell, Coord side) {
  check_lengths(l1, l2, side);
  Universe(2, side).check(cell);
  const Coord m = side / 2;
  const Coord i = fold(cell[0], side), j = fold(cell[1], side);
  if (std::max(l1, l2) <= m)
    return std::min(h1(std::max<Coord>(i, 1), l1) * tau(j, l2, side),
                    h1(std::max<Coord>(j, 1), l2) * tau(i, l1, side));
  if (std::min(l1, l2) > m)
    return std::min(h2(i + 1, l1, side) * tau(j, l2, side), h2(j + 1, l2, side) * tau(i, l1, side));
  throw std::domain_error("no closed form for lambda when one length is at most s/2 and the other exceeds it");
}

Count lambda_cell_published(Coord l1, Coord l2, const Cell& cell, Coord side) {
  check_lengths(l1, l2, side);
  Universe(2, side).check(cell);
  const Coord m = side / 2;
  const Coord i = fold(cell[0], side), j = fold(cell[1], side);
  if (std::max(l1, l2) <= m) return std::min(h1(i, l1) * tau(j, l2, side), h1(j, l2) * tau(i, l1, side));
  if (std::min(l1, l2) > m) return std::min(h2(i, l1, side) * tau(j, l2, side), h2(j, l2, side) * tau(i, l1, side));
  throw std::domain_error("no closed form for lambda when one length is at most s/2 and the other exceeds it");
}

Count lambda_exact(const TranslationQuerySet& qs, const Cell& cell) {
  return min_over_neighbors(qs.universe(), cell, [&](const DirectedEdge& e) { return gamma_unit_edge(qs, e); });
}

Count omega_cell(const TranslationQuerySet& qs, const Cell& cell) {
  return min_over_cells(qs.universe(), cell, [&](const DirectedEdge& e) { return gamma_edge(qs, e); });
}

Count lambda_exact(const std::vector<TranslationQuerySet>& family, const Cell& cell) {
  return min_over_neighbors(family_universe(family), cell, [&](const DirectedEdge& e) {
    Count total = 0;
    for (const auto& qs : family) total += gamma_unit_edge(qs, e);
    return total;
  });
}

Count omega_cell(const std::vector<TranslationQuerySet>& family, const Cell& cell) {
  return min_over_cells(family_universe(family), cell, [&](const DirectedEdge& e) {
    Count total = 0;
    for (const auto& qs : family) total += gamma_edge(qs, e);
    return total;
  });
}

Rational t_sum(Coord l1, Coord l2, Coord side) {
  check_lengths(l1, l2, side);
  if (l1 > l2) std::swap(l1, l2);
  const Coord m = side / 2;
  if (l1 > m) {
    const Coord L1 = side - l1 + 1, L2 = side - l2 + 1;
    return R(2, 3) * R((L2 - 1) * L2 * (3 * L1 - L2 - 1));
  }
  return t_sum_published(l1, l2, side);
}

Rational t_sum_published(Coord l1, Coord l2, Coord side) {
  check_lengths(l1, l2, side);
  if (l1 > l2) std::swap(l1, l2);
  const Coord m = side / 2;
  const Rational a = R(l1), b = R(l2), M = R(m);
  if (l2 <= m && 2 * l1 <= l2) {
    return R(4) * (a / 6 - a * a / 2 + a * a * a / 12 - a * b / 2 + a * a * b / 2 + R(3, 2) * a * M -
                   R(5, 4) * a * a * M - a * b * M + R(2) * a * M * M);
  }
  if (l2 <= m) {
    return R(4) * (a / 6 - a * a / 2 + a * a * a / 12 + a * b / 2 + R(3, 2) * a * a * b - b * b / 2 - a * b * b +
                   b * b * b / 4 + a * M / 2 - R(9, 4) * a * a * M + b * M / 2 - b * b * M / 4 + R(2) * a * M * M);
  }
  if (l1 > m) {
    const Coord L1 = side - l1 + 1, L2 = side - l2 + 1;
    return R(2, 3) * R((1 + 3 * L1 - L2) * L2 * (1 + L2));
  }
  throw std::domain_error("no closed form for T when one length is at most s/2 and the other exceeds it");
}

Count t_sum_exact(const TranslationQuerySet& qs) {
  Count total = 0;
  for_each_cell(qs.universe(), [&](const Cell& c) { total += lambda_exact(qs, c); });
  return total;
}

Count lambda_max(const TranslationQuerySet& qs) {
  Count best = 0;
  for_each_cell(qs.universe(), [&](const Cell& c) { best = std::max(best, lambda_exact(qs, c)); });
  return best;
}

FormulaValue lb_exact_continuous(const TranslationQuerySet& qs) {
  Count total = 0, peak = 0;
  for_each_cell(qs.universe(), [&](const Cell& c) {
    const Count l = lambda_exact(qs, c);
    total += l;
    peak = std::max(peak, l);
  });
  FormulaValue out;
  out.value = Rational(total, 2 * qs.size());
  out.slack = Rational(peak, 2 * qs.size());
  out.label = "lambda-sum";
  return out;
}

FormulaValue lb_exact_general(const TranslationQuerySet& qs) {
  FormulaValue out = lb_exact_continuous(qs);
  out.value = out.value / R(2);
  out.slack = out.slack / R(2);
  return out;
}

FormulaValue lb2d_continuous(Coord l1, Coord l2, Coord side) {
  check_lengths(l1, l2, side);
  const TranslationQuerySet qs(Universe(2, side), Extent(l1, l2));
  FormulaValue out;
  out.value = Rational(t_sum_exact(qs), 2 * qs.size());
  out.slack = R(1);
  out.label = "T/2|Q|";
  return out;
}

FormulaValue lb2d_general(Coord l1, Coord l2, Coord side) {
  FormulaValue out = lb2d_continuous(l1, l2, side);
  out.value = out.value / R(2);
  out.label = "T/4|Q|";
  return out;
}

FormulaValue thm4_onion3d(Coord l, Coord side) {
  check_lengths(l, l, side);
  const Coord m = side / 2;
  const Coord L = side - l + 1;
  FormulaValue out;
  if (l <= m) {
    out.value = R(l * l) - R(2, 5) * R(l * l * l * l * l) / R(L * L * L);
    out.kind = FormulaKind::leading_order;
    out.label = "l<=m";
  } else {
    out.value = R(3, 5) * R(L * L) + R(13, 4) * R(L) - R(13, 6);
    out.kind = FormulaKind::upper_bound;
    out.label = "l>m";
  }
  out.slack = R(0);
  return out;
}

FormulaValue lb3d_continuous(Coord l, Coord side) {
  check_lengths(l, l, side);
  const Coord m = side / 2;
  const Coord L = side - l + 1;
  FormulaValue out;
  if (l > m) {
    out.value = R(3, 5) * R(L * L) - R(3, 2) * R(L);
    out.slack = R(1);
    out.label = "l>m";
  } else {
    const Rational a = R(l), M = R(m);
    out.value = a * a + (R(29, 40) * a * a * a * a * a + R(15, 8) * M * a * a * a * a - R(3) * M * M * a * a * a) /
                            R(L * L * L);
    out.slack = R(0);
    out.kind = FormulaKind::leading_order;
    out.label = "l<=m";
  }
  return out;
}

FormulaValue lb3d_general(Coord l, Coord side) {
  FormulaValue out = lb3d_continuous(l, side);
  out.value = out.value / R(2);
  if (out.kind == FormulaKind::exact_with_eps) out.slack = R(2);
  return out;
}

Rational approx_ratio(const Curve& curve, const TranslationQuerySet& qs) {
  const FormulaValue lb = lb_exact_general(qs);
  if (lb.value <= R(0)) throw std::domain_error("lower bound is not positive; ratio is vacuous");
  return avg_clustering_fast(curve, qs) / lb.value;
}

}  // namespace sfc
