#pragma once

#include <string>
#include <vector>

#include "chromo/centers.hpp"

namespace chromo {

/// The locus quadrance(colour, center, X) = K. Blue circles are Euclidean
/// circles; red and green ones are rectangular hyperbolas. K may be zero.
struct Circle {
  Colour colour;
  Point center;
  Scalar K;
};

bool on_circle(const Point& p, const Circle& c);

/// The unique circle of the colour through the three vertices.
Circle circumcircle(Colour c, const Triangle& t);

/// Circumcircle of the midpoint triangle.
Circle nine_point_circle(Colour c, const Triangle& t);

enum class Outcome { pass, fail, skipped_null };

struct NamedCheck {
  std::string name;
  Outcome outcome;
};

/// Orthocenters on the other two circumcircles (6 checks) and, for each
/// colour, the nine-point circle through its three feet, three
/// orthocenter-to-vertex midpoints, three side midpoints and the other two
/// circumcenters (33 checks). A foot on a side null in that colour is
/// reported as skipped_null.
std::vector<NamedCheck> incidence_report(const Triangle& t);

}  // namespace chromo
