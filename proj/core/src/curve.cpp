#include <array>
#include <stdexcept>
#include <string>

#include "sfc/curves.hpp"

namespace sfc {

namespace {

struct KindInfo {
  CurveKind kind;
  std::string_view name;
  int dim;
  bool power_of_two;
  bool continuous;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {CurveKind::onion2d, "onion2d", 2, false, true},
    {CurveKind::onion3d, "onion3d", 3, false, false},
    {CurveKind::hilbert2d, "hilbert2d", 2, true, true},
    {CurveKind::hilbert3d, "hilbert3d", 3, true, true},
    {CurveKind::z2d, "z2d", 2, true, false},
    {CurveKind::z3d, "z3d", 3, true, false},
    {CurveKind::gray2d, "gray2d", 2, true, false},
    {CurveKind::rowmajor, "rowmajor", 2, false, false},
    {CurveKind::colmajor, "colmajor", 2, false, false},
}};

const KindInfo& info(CurveKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw std::invalid_argument("unknown curve kind");
}

}  // namespace

std::string_view to_string(CurveKind kind) { return info(kind).name; }

std::optional<CurveKind> parse_curve_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  return std::nullopt;
}

const std::vector<CurveKind>& all_curve_kinds() {
  static const std::vector<CurveKind> kinds = [] {
    std::vector<CurveKind> out;
    for (const auto& k : kKinds) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

int curve_dimension(CurveKind kind) { return info(kind).dim; }

std::string support_error(CurveKind kind, const Universe& u) {
  const KindInfo& k = info(kind);
  if (u.dim() != k.dim)
    return std::string(k.name) + " requires a " + std::to_string(k.dim) + "-dimensional universe";
  if (k.power_of_two && !is_power_of_two(u.side())) return "side must be a power of two";
  return {};
}

Curve::Curve(CurveKind kind, const Universe& u) : kind_(kind), universe_(u) {
  const std::string err = support_error(kind, u);
  if (!err.empty()) throw std::invalid_argument(err);
  if (is_power_of_two(u.side())) bits_ = log2_exact(u.side());

  std::vector<Rank> candidates;
  switch (kind) {
    case CurveKind::onion2d:
    case CurveKind::hilbert2d:
    case CurveKind::hilbert3d:
      breaks_ = std::vector<Rank>{};
      return;
    case CurveKind::z2d:
    case CurveKind::z3d:
    case CurveKind::gray2d:
      return;
    case CurveKind::onion3d:
      candidates = onion3d_part_starts(u.side());
      break;
    case CurveKind::rowmajor:
    case CurveKind::colmajor:
      for (Coord k = 1; k < u.side(); ++k) candidates.push_back(k * u.side());
      break;
  }
  std::vector<Rank> breaks;
  for (Rank r : candidates)
    if (r > 0 && !grid_neighbors(cell_at(r - 1), cell_at(r))) breaks.push_back(r);
  breaks_ = std::move(breaks);
}

Rank Curve::index(const Cell& c) const {
  const Coord s = universe_.side();
  switch (kind_) {
    case CurveKind::onion2d:
      return onion2d_index(c, s);
    case CurveKind::onion3d:
      return onion3d_index(c, s);
    case CurveKind::hilbert2d:
    case CurveKind::hilbert3d:
      return hilbert_index(c, s);
    case CurveKind::z2d:
    case CurveKind::z3d:
      return z_index(c, s);
    case CurveKind::gray2d:
      return gray_index(c, s);
    case CurveKind::rowmajor:
      return rowmajor_index(c, s);
    case CurveKind::colmajor:
      return colmajor_index(c, s);
  }
  throw std::logic_error("unreachable curve kind");
}

Cell Curve::cell_at(Rank r) const {
  const Coord s = universe_.side();
  const int d = universe_.dim();
  switch (kind_) {
    case CurveKind::onion2d:
      return onion2d_cell(r, s);
    case CurveKind::onion3d:
      return onion3d_cell(r, s);
    case CurveKind::hilbert2d:
    case CurveKind::hilbert3d:
      return hilbert_cell(r, s, d);
    case CurveKind::z2d:
    case CurveKind::z3d:
      return z_cell(r, s, d);
    case CurveKind::gray2d:
      return gray_cell(r, s, d);
    case CurveKind::rowmajor:
      return rowmajor_cell(r, s);
    case CurveKind::colmajor:
      return colmajor_cell(r, s);
  }
  throw std::logic_error("unreachable curve kind");
}

bool Curve::continuous() const { return info(kind_).continuous; }

}  // namespace sfc
