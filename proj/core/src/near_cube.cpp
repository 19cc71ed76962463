#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sfc/theory.hpp"

namespace sfc {

namespace {

constexpr double kEps = 1e-12;

bool same(double a, double b) { return std::fabs(a - b) <= kEps; }

const char* const kNames[] = {"", "I", "II", "III", "IV", "V"};

// Leading-order eta ceiling for 2D case III: twice the onion mean over the
// continuous lower bound, both divided by s.
double case3_bound_2d(double p1, double p2) {
  const double q = (1 - p1) * (1 - p2);
  const double mean = 0.5 * (p1 + p2) +
                      (2.0 / 3 * p2 * p2 * p2 - 3.5 * p1 * p2 * p2 + 2.5 * p1 * p1 * p2 - 0.5 * (p2 - p1) * (p2 - 3 * p1)) / q;
  double t;
  if (p1 <= p2 / 2)
    t = 4 * (p1 * p1 * p1 / 12 + p1 * p1 * p2 / 2 - 5.0 / 8 * p1 * p1 - 0.5 * p1 * p2 + 0.5 * p1);
  else
    t = 4 * (p1 * p1 * p1 / 12 + 1.5 * p1 * p1 * p2 - p1 * p2 * p2 + p2 * p2 * p2 / 4 - 9.0 / 8 * p1 * p1 -
             p2 * p2 / 8 + 0.5 * p1);
  const double lb = t / (2 * q);
  return 2 * mean / lb;
}

double case3_bound_3d(double p) {
  const double num = 0.75 * p * (0.5 - p) * (4 + 3 * p);
  const double den = std::pow(1 - p, 3) + p / 40 * (29 * p * p + 37.5 * p - 30);
  return 2 + num / den;
}

Coord round_length(double value, Coord side) {
  const Coord l = static_cast<Coord>(std::floor(value + 0.5));
  return std::clamp<Coord>(l, 1, side);
}

}  // namespace

CaseLabel near_cube_case(const NearCubeParams& params, int dim, Coord side) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (side < 2) throw std::invalid_argument("side must be at least 2");
  if (params.mu < -kEps || params.mu > 1 + kEps) throw std::invalid_argument("mu must lie in [0, 1]");
  if (static_cast<int>(params.phi.size()) != dim) throw std::invalid_argument("expected one phi per dimension");
  std::vector<double> psi = params.psi;
  if (psi.empty()) psi.assign(static_cast<std::size_t>(dim), 0.0);
  if (static_cast<int>(psi.size()) != dim) throw std::invalid_argument("expected one psi per dimension");
  for (double p : params.phi)
    if (p <= 0) throw std::invalid_argument("phi must be positive");

  std::vector<int> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (!same(params.phi[a], params.phi[b])) return params.phi[a] < params.phi[b];
    return psi[a] < psi[b];
  });

  CaseLabel out;
  out.mu = params.mu;
  out.lengths = Extent::filled(dim, 0);
  const double scale = std::pow(static_cast<double>(side), params.mu);
  for (int i = 0; i < dim; ++i) {
    out.phi.push_back(params.phi[order[i]]);
    out.psi.push_back(psi[order[i]]);
    out.lengths[i] = round_length(params.phi[i] * scale + psi[i], side);
  }
  out.near_cube = is_near_cube(out.lengths, side);

  const double lo = out.phi.front(), hi = out.phi.back();
  if (dim == 3 && !(same(lo, hi) && same(out.psi.front(), out.psi.back())))
    throw std::invalid_argument("3D classification covers cube query sets only");

  auto set = [&](int id) {
    out.case_id = id;
    out.name = kNames[id];
  };

  if (same(params.mu, 0)) {
    set(1);
    out.bound = 1.0;
  } else if (params.mu < 1 - kEps) {
    set(2);
    out.bound = dim == 2 ? 1 + hi / lo : 2.0;
  } else if (hi > 1 + kEps) {
    throw std::invalid_argument("phi above 1 gives lengths beyond the universe side");
  } else if (same(lo, 1) && same(hi, 1)) {
    set(5);
    if (dim == 2) {
      const double p1 = out.psi[0], p2 = out.psi[1];
      if (p2 >= 1) throw std::invalid_argument("psi must be below 1 when phi = 1");
      const double r = (p2 - p1) / (1 - p2);
      out.bound = 2 + 3 * r * r;
    } else {
      const double neg = -out.psi[0];
      if (neg > 1.5) out.bound = 2 + (95.0 / 6) / (neg - 1.5);
    }
  } else if (hi <= 0.5 + kEps) {
    set(3);
    out.bound = dim == 2 ? case3_bound_2d(lo, hi) : case3_bound_3d(lo);
  } else if (lo > 0.5 + kEps && hi < 1 - kEps) {
    set(4);
    if (dim == 2) {
      const double r = (hi - lo) / (1 - hi);
      out.bound = 2 + 3 * r * r;
    } else {
      out.bound = 2.0;
    }
  } else {
    throw std::invalid_argument("phi values straddle 1/2 or mix 1 with smaller values; no case applies");
  }
  return out;
}

}  // namespace sfc
