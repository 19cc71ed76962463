#pragma once

// Invariant sweeps behind `sfc verify`. Each suite returns one check per
// (configuration group) with the measured value and the bound it is held to.

#include <string>
#include <vector>

#include "sfc/core.hpp"
#include "sfc/rational.hpp"

namespace sfc::cli {

enum class Relation { eq, le, ge, info };

std::string_view to_string(Relation r);

struct Check {
  std::string name;
  bool passed = true;
  Rational measured;
  Rational bound;
  Relation relation = Relation::info;
  std::string detail;
};

struct VerifyOptions {
  Coord max_side = 16;                 // lemma1, lemma2, soundness (2D)
  std::vector<Coord> sides{8, 16, 32};  // thm1
  unsigned workers = 1;
};

struct VerifyReport {
  std::string scope;
  std::vector<Check> checks;

  bool passed() const;
};

// Fast average equals per-query average for every curve and length tuple.
std::vector<Check> verify_lemma1(const VerifyOptions& opts);
// Product formula for unit-edge crossings equals enumeration.
std::vector<Check> verify_lemma2(const VerifyOptions& opts);
// Onion2d mean within the stated slack of the closed form.
std::vector<Check> verify_thm1(const VerifyOptions& opts);
// No curve averages below the general lower bound minus slack; continuous
// curves also respect the continuous bound.
std::vector<Check> verify_soundness(const VerifyOptions& opts);
// Closed-form lambda and T against enumeration; omega >= lambda / 2.
std::vector<Check> verify_lambda(const VerifyOptions& opts);

// scope: lemma1, lemma2, thm1, soundness, lambda or all. Throws
// std::invalid_argument on an unknown scope.
VerifyReport run_verify(const std::string& scope, const VerifyOptions& opts);

const std::vector<std::string>& verify_scopes();

}  // namespace sfc::cli
