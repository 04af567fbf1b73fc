#pragma once

#include <array>
#include <optional>

#include "chromo/metric.hpp"

namespace chromo {

/// Quadrances, vertex spreads and quadrea of a triangle in one colour.
///
/// Q[0] = Q(A2,A3), Q[1] = Q(A1,A3), Q[2] = Q(A1,A2). s[0] is the spread
/// between A1A2 and A1A3 and so on; a spread is empty when either line at
/// that vertex is null in the colour.
struct TriangleMeasures {
  Colour colour;
  std::array<Scalar, 3> Q;
  std::array<std::optional<Scalar>, 3> s;
  Scalar quadrea;

  bool all_spreads_defined() const { return s[0] && s[1] && s[2]; }
};

TriangleMeasures measures(Colour c, const Triangle& t);

/// (Q1 + Q2 + Q3)^2 - 2(Q1^2 + Q2^2 + Q3^2).
Scalar quadrea(const Scalar& q1, const Scalar& q2, const Scalar& q3);
/// Quadrea of the triangle in colour c, from its quadrances.
Scalar quadrea(Colour c, const Triangle& t);
/// The same value from the bracket identity: +4([x1y2]^-)^2 for blue, its negative otherwise.
Scalar quadrea_from_area(Colour c, const Triangle& t);

bool triple_quad_holds(const Scalar& q1, const Scalar& q2, const Scalar& q3);
bool pythagoras_holds(const Scalar& q1, const Scalar& q2, const Scalar& q3);

/// s1 Q2 = s2 Q1 and s2 Q3 = s3 Q2. Throws UndefinedSpread for the first null vertex.
bool spread_law_holds(const TriangleMeasures& m);

/// (Qi + Qj - Qk)^2 = 4 Qi Qj (1 - sk) at the 1-based vertex k (default 3).
/// Throws UndefinedSpread if sk is undefined.
bool cross_law_holds(const TriangleMeasures& m, int vertex = 3);

bool triple_spread_holds(const Scalar& s1, const Scalar& s2, const Scalar& s3);

}  // namespace chromo
