#pragma once

// Brute-force reference implementations. Nothing here shares code with the
// subshift machinery it is used to check.

#include "holedim/rational.hpp"
#include "holedim/sft.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace holedim::oracle {

/// Enumerates all k^n words for each n = 1..depth and tests every suffix
/// cylinder literally against the hole. Requires k^depth <= 1e7 and hole
/// endpoints whose numerator and denominator fit in 63 bits.
SurvivorCounts brute_counts(const Hole& hole, unsigned depth, Mode mode);

struct EscapeRow {
  Rational x;
  std::optional<unsigned> escape_time;  // nothing: survived every step
};

/// Exact orbits of x = i/grid, i = 0..grid-1, for up to `steps` iterations
/// of T_k; escape_time is the first n with T_k^n x in (a, b).
std::vector<EscapeRow> orbit_escape_table(const Hole& hole, unsigned grid, unsigned steps);

/// Root of sum_i coeffs[i] x^i in [lo, hi] by bisection down to `tolerance`.
/// Throws std::invalid_argument without a sign change on the bracket.
double poly_root(const std::vector<double>& coeffs, double lo, double hi, double tolerance = 1e-12);

}  // namespace holedim::oracle
