#pragma once

// Brute-force reference implementations. Each one enumerates translations
// directly and shares no counting code with the closed forms it checks.
// Size guards throw std::length_error.

#include "sfc/core.hpp"
#include "sfc/curves.hpp"
#include "sfc/rational.hpp"

namespace sfc::oracle {

inline constexpr Count kMaxTranslations = 1'000'000;
inline constexpr Count kMaxWork = 1'000'000'000;
inline constexpr Coord kMaxOmegaSide = 16;

// Translations containing the cell / both cells.
Count containment_brute(const TranslationQuerySet& qs, const Cell& cell);
Count pair_containment_brute(const TranslationQuerySet& qs, const Cell& a, const Cell& b);

// Queries entered or left by the edge. |Q| <= 10^6.
Count gamma_edge_brute(const TranslationQuerySet& qs, const DirectedEdge& e);

// Minimum of gamma_edge_brute over grid neighbours / over all other cells
// (omega requires s <= 16).
Count lambda_brute(const TranslationQuerySet& qs, const Cell& cell);
Count omega_brute(const TranslationQuerySet& qs, const Cell& cell);

// Sum of lambda_brute over every cell.
Count t_sum_brute(const TranslationQuerySet& qs);

// Mean cluster count: for each translation, the cells whose curve
// predecessor lies outside it. |Q| * |q| <= 10^9.
Rational avg_clustering_oracle(const Curve& curve, const TranslationQuerySet& qs);

}  // namespace sfc::oracle
