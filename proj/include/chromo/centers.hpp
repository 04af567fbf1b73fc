#pragma once

#include <array>

#include "chromo/metric.hpp"

namespace chromo {

// Closed-form coloured centers. Each is a polynomial in the vertex
// coordinates divided by a multiple of [x1y2]^-, which a Triangle
// guarantees is nonzero, so these are total.

Point orthocenter(Colour c, const Triangle& t);
Point circumcenter(Colour c, const Triangle& t);
Point nine_point_center(Colour c, const Triangle& t);

/// Same three centers from an already computed BracketSet.
Point orthocenter(Colour c, const BracketSet& b);
Point circumcenter(Colour c, const BracketSet& b);
Point nine_point_center(Colour c, const BracketSet& b);

/// join(O, C) in colour c. Throws EulerDegenerate when O = C.
Line euler_line(Colour c, const Triangle& t);

struct ColourCenters {
  Point O;  // orthocenter
  Point C;  // circumcenter
  Point N;  // nine-point center
};

/// All ten centers of a triangle.
///
/// Construction checks, per colour, that N = mid(O, C), G = O/3 + 2C/3 and
/// O, N, G, C are collinear; and across colours that each C is the midpoint
/// of the other two O's and each N the midpoint of the other two C's. A
/// failed check throws std::logic_error.
class CenterSet {
 public:
  const ColourCenters& operator[](Colour c) const { return by_colour_[static_cast<int>(c)]; }
  const Point& G() const { return G_; }

  friend CenterSet center_set(const Triangle& t);

 private:
  CenterSet(std::array<ColourCenters, 3> by_colour, Point g);

  std::array<ColourCenters, 3> by_colour_;
  Point G_;
};

/// Throws CharacteristicThree over F_3.
CenterSet center_set(const Triangle& t);

/// The triangle of the blue, red and green orthocenters.
struct OmegaTriangle {
  Triangle vertices;  // (O_b, O_r, O_g)
};

/// Throws OmegaDegenerate when the orthocenters are collinear, and
/// CharacteristicThree over F_3 (the centroid check needs 1/3).
OmegaTriangle omega_triangle(const Triangle& t);

}  // namespace chromo
