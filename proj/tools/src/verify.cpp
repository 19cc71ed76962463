#include "sfc_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sfc/clustering.hpp"
#include "sfc/curves.hpp"
#include "sfc/oracle.hpp"
#include "sfc/theory.hpp"

namespace sfc::cli {

namespace {

std::vector<Coord> capped(std::initializer_list<Coord> sides, Coord limit) {
  std::vector<Coord> out;
  for (Coord s : sides)
    if (s <= limit) out.push_back(s);
  return out;
}

std::vector<Curve> curves_for(const Universe& u) {
  std::vector<Curve> out;
  for (CurveKind k : all_curve_kinds())
    if (supports(k, u)) out.emplace_back(k, u);
  return out;
}

// Visits every length tuple in [1, s]^d.
void for_each_lengths(int dim, Coord side, const std::function<void(const Extent&)>& fn) {
  Extent l = Extent::filled(dim, 1);
  while (true) {
    fn(l);
    int a = 0;
    while (a < dim) {
      if (++l[a] <= side) break;
      l[a] = 1;
      ++a;
    }
    if (a == dim) return;
  }
}

void for_each_cell(const Universe& u, const std::function<void(const Cell&)>& fn) {
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

std::string tag(std::string_view curve, int dim, Coord side) {
  return std::string(curve) + " d=" + std::to_string(dim) + " s=" + std::to_string(side);
}

Check mismatch_check(std::string name, Count mismatches, Count total, std::string first) {
  Check c;
  c.name = std::move(name);
  c.measured = Rational(mismatches);
  c.bound = Rational(0);
  c.relation = Relation::eq;
  c.passed = mismatches == 0;
  c.detail = std::to_string(total) + " comparisons";
  if (!first.empty()) c.detail += "; first mismatch " + first;
  return c;
}

Check bound_check(std::string name, const Rational& measured, const Rational& bound, Relation rel, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.bound = bound;
  c.relation = rel;
  c.passed = rel == Relation::le ? measured <= bound : rel == Relation::ge ? measured >= bound : measured == bound;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::eq:
      return "==";
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::info:
      return "info";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> verify_lemma1(const VerifyOptions& opts) {
  std::vector<Check> out;
  auto sweep = [&](int dim, Coord side) {
    const Universe u(dim, side);
    for (const Curve& curve : curves_for(u)) {
      Count total = 0, bad = 0;
      std::string first;
      for_each_lengths(dim, side, [&](const Extent& l) {
        const TranslationQuerySet qs(u, l);
        const Rational fast = avg_clustering_fast(curve, qs);
        const Rational naive = avg_clustering_naive(curve, qs, opts.workers);
        ++total;
        if (fast != naive) {
          if (first.empty()) first = "l=(" + to_string(l) + ") fast=" + fast.str() + " naive=" + naive.str();
          ++bad;
        }
      });
      out.push_back(mismatch_check("lemma1 " + tag(curve.name(), dim, side), bad, total, first));
    }
  };
  for (Coord s : capped({4, 6, 8, 12, 16}, opts.max_side)) sweep(2, s);
  for (Coord s : capped({4, 8}, opts.max_side)) sweep(3, s);
  return out;
}

std::vector<Check> verify_lemma2(const VerifyOptions& opts) {
  std::vector<Check> out;
  for (Coord s : capped({2, 4, 6, 8, 10, 12}, std::min<Coord>(opts.max_side, 12))) {
    const Universe u(2, s);
    Count total = 0, bad = 0;
    std::string first;
    for_each_lengths(2, s, [&](const Extent& l) {
      const TranslationQuerySet qs(u, l);
      for_each_cell(u, [&](const Cell& a) {
        for (int axis = 0; axis < 2; ++axis) {
          Cell b = a;
          if (++b[axis] >= s) continue;
          const DirectedEdge e{a, b};
          const Count formula = gamma_unit_edge(qs, e);
          const Count brute = oracle::gamma_edge_brute(qs, e);
          const Count diff = gamma_edge(qs, e);
          ++total;
          if (formula != brute || diff != brute) {
            if (first.empty())
              first = "l=(" + to_string(l) + ") e=(" + to_string(a) + ")->(" + to_string(b) +
                      ") formula=" + std::to_string(formula) + " brute=" + std::to_string(brute);
            ++bad;
          }
        }
      });
    });
    out.push_back(mismatch_check("lemma2 d=2 s=" + std::to_string(s), bad, total, first));
  }
  return out;
}

std::vector<Check> verify_thm1(const VerifyOptions& opts) {
  std::vector<Check> out;
  for (Coord s : opts.sides) {
    const Universe u(2, s);
    const Curve onion(CurveKind::onion2d, u);
    struct Group {
      Rational worst;
      Rational slack;
      std::string where;
      Count n = 0;
    };
    Group small, large, mixed;
    for_each_lengths(2, s, [&](const Extent& l) {
      const FormulaValue f = thm1_onion2d(l[0], l[1], s);
      const Rational gap = abs(avg_clustering_fast(onion, TranslationQuerySet(u, l)) - f.value);
      Group& g = f.label == "l2<=m" ? small : f.label == "l1>m" ? large : mixed;
      g.slack = f.slack;
      ++g.n;
      if (g.n == 1 || gap > g.worst) {
        g.worst = gap;
        g.where = "l=(" + to_string(l) + ")";
      }
    });
    const std::string base = "thm1 s=" + std::to_string(s);
    if (small.n)
      out.push_back(bound_check(base + " l2<=m", small.worst, small.slack, Relation::le,
                                "max |gap| at " + small.where + " over " + std::to_string(small.n) + " sizes"));
    if (large.n)
      out.push_back(bound_check(base + " l1>m", large.worst, large.slack, Relation::le,
                                "max |gap| at " + large.where + " over " + std::to_string(large.n) + " sizes"));
    if (mixed.n) {
      Check c;
      c.name = base + " mixed";
      c.measured = mixed.worst;
      c.relation = Relation::info;
      c.detail = "leading-order 2m/3; max |gap| at " + mixed.where;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Check> verify_soundness(const VerifyOptions& opts) {
  std::vector<Check> out;
  auto sweep = [&](int dim, Coord side) {
    const Universe u(dim, side);
    const std::vector<Curve> curves = curves_for(u);
    std::vector<Rational> min_general(curves.size()), min_continuous(curves.size());
    std::vector<std::string> where_general(curves.size()), where_continuous(curves.size());
    bool first = true;
    for_each_lengths(dim, side, [&](const Extent& l) {
      const TranslationQuerySet qs(u, l);
      std::vector<FormulaValue> general{lb_exact_general(qs)};
      std::vector<FormulaValue> continuous{lb_exact_continuous(qs)};
      if (dim == 2) {
        general.push_back(lb2d_general(l[0], l[1], side));
        continuous.push_back(lb2d_continuous(l[0], l[1], side));
      } else if (l[0] == l[1] && l[1] == l[2]) {
        const FormulaValue g = lb3d_general(l[0], side), c = lb3d_continuous(l[0], side);
        if (g.kind == FormulaKind::exact_with_eps) general.push_back(g);
        if (c.kind == FormulaKind::exact_with_eps) continuous.push_back(c);
      }
      for (std::size_t i = 0; i < curves.size(); ++i) {
        const Rational avg = avg_clustering_fast(curves[i], qs);
        for (const auto& b : general) {
          const Rational margin = avg - (b.value - b.slack);
          if (first || margin < min_general[i]) {
            min_general[i] = margin;
            where_general[i] = "l=(" + to_string(l) + ") " + b.label;
          }
        }
        for (const auto& b : continuous) {
          const Rational margin = avg - (b.value - b.slack);
          if (first || margin < min_continuous[i]) {
            min_continuous[i] = margin;
            where_continuous[i] = "l=(" + to_string(l) + ") " + b.label;
          }
        }
      }
      first = false;
    });
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const std::string base = "soundness " + tag(curves[i].name(), dim, side);
      out.push_back(bound_check(base + " general", min_general[i], Rational(0), Relation::ge,
                                "min margin avg - (lb - slack) at " + where_general[i]));
      if (curves[i].continuous())
        out.push_back(bound_check(base + " continuous", min_continuous[i], Rational(0), Relation::ge,
                                  "min margin avg - (lb - slack) at " + where_continuous[i]));
    }
  };
  for (Coord s : capped({4, 6, 8, 12, 16}, opts.max_side)) sweep(2, s);
  sweep(3, opts.max_side >= 8 ? 8 : 4);
  return out;
}

std::vector<Check> verify_lambda(const VerifyOptions&) {
  std::vector<Check> out;
  for (Coord s : {8, 12, 16}) {
    const Universe u(2, s);
    const Coord m = s / 2;
    Count total = 0, bad = 0, prod_total = 0, prod_bad = 0;
    std::string first, prod_first;
    Rational worst_small(0), worst_large(0);
    Count n_small = 0, n_large = 0;
    for_each_lengths(2, s, [&](const Extent& l) {
      const TranslationQuerySet qs(u, l);
      const bool covered = std::max(l[0], l[1]) <= m || std::min(l[0], l[1]) > m;
      Count brute_sum = 0;
      for_each_cell(u, [&](const Cell& c) {
        const Count brute = oracle::lambda_brute(qs, c);
        brute_sum += brute;
        ++prod_total;
        if (lambda_exact(qs, c) != brute) {
          if (prod_first.empty()) prod_first = "l=(" + to_string(l) + ") cell=(" + to_string(c) + ")";
          ++prod_bad;
        }
        if (!covered) return;
        ++total;
        const Count formula = lambda_cell(l[0], l[1], c, s);
        if (formula != brute) {
          if (first.empty())
            first = "l=(" + to_string(l) + ") cell=(" + to_string(c) + ") formula=" + std::to_string(formula) +
                    " brute=" + std::to_string(brute);
          ++bad;
        }
      });
      if (!covered || l[0] > l[1]) return;
      const Rational diff = abs(t_sum(l[0], l[1], s) - Rational(brute_sum));
      if (l[0] > m) {
        ++n_large;
        worst_large = std::max(worst_large, diff);
      } else {
        ++n_small;
        worst_small = std::max(worst_small, diff);
      }
    });
    const std::string base = " s=" + std::to_string(s);
    out.push_back(mismatch_check("lambda closed form" + base, bad, total, first));
    out.push_back(mismatch_check("lambda neighbour minimum" + base, prod_bad, prod_total, prod_first));
    out.push_back(bound_check("T closed form l1>m" + base, worst_large, Rational(0), Relation::eq,
                              "max |T - sum lambda| over " + std::to_string(n_large) + " sizes"));
    out.push_back(bound_check("T closed form l2<=m" + base, worst_small, Rational(4 * s), Relation::le,
                              "max |T - sum lambda| over " + std::to_string(n_small) + " sizes"));
  }

  {
    const Universe u(2, 8);
    Count total = 0, bad = 0, agree_bad = 0;
    std::string first;
    for (const Extent& l : {Extent(2, 2), Extent(3, 3), Extent(3, 5), Extent(6, 6)}) {
      const TranslationQuerySet qs(u, l);
      for_each_cell(u, [&](const Cell& c) {
        const Count omega = oracle::omega_brute(qs, c);
        const Count lambda = oracle::lambda_brute(qs, c);
        ++total;
        if (omega_cell(qs, c) != omega) ++agree_bad;
        if (2 * omega < lambda || omega > lambda) {
          if (first.empty()) first = "l=(" + to_string(l) + ") cell=(" + to_string(c) + ")";
          ++bad;
        }
      });
    }
    out.push_back(mismatch_check("omega in [lambda/2, lambda] s=8", bad, total, first));
    out.push_back(mismatch_check("omega production = enumeration s=8", agree_bad, total, ""));
  }

  {
    const Coord s = 8;
    const Universe u(2, s);
    const std::vector<TranslationQuerySet> family{TranslationQuerySet(u, Extent(s, 1)),
                                                  TranslationQuerySet(u, Extent(1, s))};
    Count low = 0, total = 0;
    Count least = -1;
    for_each_cell(u, [&](const Cell& c) {
      const Count w = omega_cell(family, c);
      ++total;
      if (least < 0 || w < least) least = w;
      if (w < 2) ++low;
    });
    out.push_back(bound_check("omega rows+columns s=8", Rational(least), Rational(2), Relation::ge,
                              std::to_string(low) + " of " + std::to_string(total) + " cells below 2"));
  }
  return out;
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes{"lemma1", "lemma2", "thm1", "soundness", "lambda", "all"};
  return scopes;
}

VerifyReport run_verify(const std::string& scope, const VerifyOptions& opts) {
  VerifyReport report;
  report.scope = scope;
  auto add = [&](std::vector<Check> checks) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };
  const bool all = scope == "all";
  if (all || scope == "lemma1") add(verify_lemma1(opts));
  if (all || scope == "lemma2") add(verify_lemma2(opts));
  if (all || scope == "thm1") add(verify_thm1(opts));
  if (all || scope == "soundness") add(verify_soundness(opts));
  if (all || scope == "lambda") add(verify_lambda(opts));
  if (report.checks.empty() && std::find(verify_scopes().begin(), verify_scopes().end(), scope) == verify_scopes().end())
    throw std::invalid_argument("unknown verify scope '" + scope + "'");
  return report;
}

}  // namespace sfc::cli
