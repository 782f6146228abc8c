#pragma once

// Exact rational feasibility for intersections of convex hulls.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace chessplex {

using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
/// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws
/// InvalidInput on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Phase-one simplex with Bland's rule on  A x = b, x >= 0. Returns a
/// feasible basic solution or nullopt. Rows with negative b are negated.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b);

struct HullIntersection {
  RationalPoint point;
  /// weights[i][j] is the coefficient of point_sets[i][j].
  std::vector<std::vector<Rational>> weights;
};

/// A common point of conv(point_sets[0]), ..., conv(point_sets[r-1]), or
/// nullopt. Throws InvalidInput on empty sets or dimension mismatch.
std::optional<HullIntersection> hulls_intersect(
    const std::vector<std::vector<RationalPoint>>& point_sets);

}  // namespace chessplex
