#pragma once

// Closed-form clustering values and lower bounds for cube-like query sets,
// the minimum crossing numbers lambda and omega, and the near-cube case
// classifier with its predicted approximation-ratio ceilings.

#include <optional>
#include <string>
#include <vector>

#include "sfc/clustering.hpp"
#include "sfc/core.hpp"
#include "sfc/curves.hpp"
#include "sfc/rational.hpp"

namespace sfc {

enum class FormulaKind {
  exact_with_eps,  // |true - value| <= slack
  leading_order,   // o(.) remainder, slack not certified
  upper_bound,     // true <= value
};

std::string_view to_string(FormulaKind kind);

struct FormulaValue {
  Rational value;
  Rational slack;
  FormulaKind kind = FormulaKind::exact_with_eps;
  bool swapped = false;  // inputs were reordered to l1 <= l2
  std::string label;     // which case produced the value
};

// Mean onion2d clustering number for Q(l1, l2): slack 5 when l2 <= s/2,
// slack 2 when l1 > s/2, and the leading-order 2m/3 otherwise.
FormulaValue thm1_onion2d(Coord l1, Coord l2, Coord side);

// gamma(Q, O) split by edge class: edges within a layer along axis 0 (s1),
// within a layer along axis 1 including the closing edges e2_t (s2), and the
// layer-crossing edges minus the closing edges (s3).
struct EdgeSums {
  Count s1 = 0;
  Count s2 = 0;
  Count s3 = 0;
};
EdgeSums onion_edge_sums(Coord l1, Coord l2, Coord side);

// Placement counts used by the lambda closed form.
Coord tau(Coord k, Coord l, Coord side);
Coord h1(Coord t, Coord l);
Coord h2(Coord t, Coord l, Coord side);

// Closed-form lambda for 2D cells when l2 <= m or l1 > m (both lengths on the
// same side of m). Throws std::domain_error in the mixed case.
Count lambda_cell(Coord l1, Coord l2, const Cell& cell, Coord side);
// The printed variant: h1(i) without the i = 0 guard and h2 at the outer edge.
Count lambda_cell_published(Coord l1, Coord l2, const Cell& cell, Coord side);

// Minimum crossing number over neighbour edges (any dimension).
Count lambda_exact(const TranslationQuerySet& qs, const Cell& cell);
// Minimum crossing number over edges to every other cell of the universe.
Count omega_cell(const TranslationQuerySet& qs, const Cell& cell);
// Same minima for a union of translation sets (crossings are summed).
Count lambda_exact(const std::vector<TranslationQuerySet>& family, const Cell& cell);
Count omega_cell(const std::vector<TranslationQuerySet>& family, const Cell& cell);

// Sum of lambda over all cells of Q(l1, l2). Requires l1 <= l2 (swapped
// otherwise); throws std::domain_error in the mixed case.
Rational t_sum(Coord l1, Coord l2, Coord side);
Rational t_sum_published(Coord l1, Coord l2, Coord side);
// Sum of lambda_exact over all cells.
Count t_sum_exact(const TranslationQuerySet& qs);
// Largest lambda_exact over all cells.
Count lambda_max(const TranslationQuerySet& qs);

// Lower bound for continuous curves: value T / 2|Q| and slack
// lambda_max / 2|Q| from the exact lambda sum (any dimension).
FormulaValue lb_exact_continuous(const TranslationQuerySet& qs);
// Lower bound for arbitrary curves: half of the continuous bound.
FormulaValue lb_exact_general(const TranslationQuerySet& qs);

// 2D bounds for Q(l1, l2): T / 2|Q| with slack 1, and half of it.
FormulaValue lb2d_continuous(Coord l1, Coord l2, Coord side);
FormulaValue lb2d_general(Coord l1, Coord l2, Coord side);

// Onion3d mean for cubes of side l: leading order l^2 - 2/5 l^5/L^3 when
// l <= s/2, upper bound 3/5 L^2 + 13/4 L - 13/6 otherwise.
FormulaValue thm4_onion3d(Coord l, Coord side);
// Cube lower bounds: 3/5 L^2 - 3/2 L (slack 1) when l > s/2, leading order
// l^2 + (29/40 l^5 + 15/8 m l^4 - 3 m^2 l^3)/L^3 otherwise. General curves:
// half, slack 2.
FormulaValue lb3d_continuous(Coord l, Coord side);
FormulaValue lb3d_general(Coord l, Coord side);

struct CaseLabel {
  int case_id = 0;  // 1..5
  std::string name;  // "I".."V"
  double mu = 0.0;
  std::vector<double> phi;  // sorted ascending
  std::vector<double> psi;  // reordered along with phi
  Extent lengths;           // l_i at the evaluated side
  bool near_cube = false;   // |l_j - l_i| <= s / log2 s
  std::optional<double> bound;  // predicted eta ceiling; empty when unknown
};

// Throws std::invalid_argument when the parameters fall outside cases I-V.
CaseLabel near_cube_case(const NearCubeParams& params, int dim, Coord side);

// Mean clustering number divided by the exact general lower bound. Throws
// std::domain_error when the bound is not positive.
Rational approx_ratio(const Curve& curve, const TranslationQuerySet& qs);

}  // namespace sfc
