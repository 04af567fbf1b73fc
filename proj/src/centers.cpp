#include "chromo/centers.hpp"

#include <stdexcept>

namespace chromo {

Point orthocenter(Colour c, const BracketSet& b) {
  const Scalar& d = b.x1y2;
  switch (c) {
    case Colour::blue:
      return {(b.x1x2y2 + b.y1_y2sq) / d, (b.x1y1y2 + b.x1sq_x2) / d};
    case Colour::red:
      return {(b.x1x2y2 - b.y1_y2sq) / d, (b.x1y1y2 - b.x1sq_x2) / d};
    case Colour::green:
      return {(b.x1sq_y2 + b.x1x2y1) / d, (b.x1_y2sq - b.x1y1y2) / d};
  }
  throw std::logic_error("bad colour");
}

Point circumcenter(Colour c, const BracketSet& b) {
  const Scalar d2 = 2 * b.x1y2;
  switch (c) {
    case Colour::blue:
      return {(b.x1sq_y2 + b.y1sq_y2) / d2, (b.x1_y2sq + b.x1_x2sq) / d2};
    case Colour::red:
      return {(b.x1sq_y2 - b.y1sq_y2) / d2, (b.x1_y2sq - b.x1_x2sq) / d2};
    case Colour::green:
      return {b.x1x2y2 / b.x1y2, b.x1y1y2 / b.x1y2};
  }
  throw std::logic_error("bad colour");
}

Point nine_point_center(Colour c, const BracketSet& b) {
  const Scalar d4 = 4 * b.x1y2;
  switch (c) {
    case Colour::blue:
      return {(b.x1sq_y2 - b.y1sq_y2 + 2 * b.x1x2y2) / d4, (b.x1_y2sq - b.x1_x2sq + 2 * b.x1y1y2) / d4};
    case Colour::red:
      return {(b.x1sq_y2 + b.y1sq_y2 + 2 * b.x1x2y2) / d4, (b.x1_y2sq + b.x1_x2sq + 2 * b.x1y1y2) / d4};
    case Colour::green: {
      const Scalar d2 = 2 * b.x1y2;
      return {b.x1sq_y2 / d2, b.x1_y2sq / d2};
    }
  }
  throw std::logic_error("bad colour");
}

Point orthocenter(Colour c, const Triangle& t) { return orthocenter(c, brackets(t)); }
Point circumcenter(Colour c, const Triangle& t) { return circumcenter(c, brackets(t)); }
Point nine_point_center(Colour c, const Triangle& t) { return nine_point_center(c, brackets(t)); }

Line euler_line(Colour c, const Triangle& t) {
  BracketSet b = brackets(t);
  Point o = orthocenter(c, b);
  Point cc = circumcenter(c, b);
  if (o == cc) throw EulerDegenerate();
  return join(o, cc);
}

CenterSet::CenterSet(std::array<ColourCenters, 3> by_colour, Point g)
    : by_colour_(std::move(by_colour)), G_(std::move(g)) {
  const FieldSpec& field = G_.field();
  const Scalar third = field.one() / field.from_int(3);
  const Scalar two_thirds = field.from_int(2) / field.from_int(3);
  for (Colour c : kColours) {
    const ColourCenters& k = (*this)[c];
    if (k.N != midpoint(k.O, k.C)) throw std::logic_error("nine-point center is not mid(O, C)");
    if (G_ != third * k.O + two_thirds * k.C) throw std::logic_error("G != O/3 + 2C/3");
    if (G_ != third * k.C + two_thirds * k.N) throw std::logic_error("G != C/3 + 2N/3");
    if (!collinear(k.O, k.N, G_) || !collinear(k.O, G_, k.C)) throw std::logic_error("Euler points not collinear");
    auto [u, v] = other_colours(c);
    if (k.C != midpoint((*this)[u].O, (*this)[v].O)) throw std::logic_error("circumcenter is not a midpoint");
    if (k.N != midpoint((*this)[u].C, (*this)[v].C)) throw std::logic_error("nine-point center is not a midpoint");
  }
}

CenterSet center_set(const Triangle& t) {
  Point g = centroid(t);
  BracketSet b = brackets(t);
  std::array<ColourCenters, 3> by_colour;
  for (Colour c : kColours) {
    by_colour[static_cast<int>(c)] = {orthocenter(c, b), circumcenter(c, b), nine_point_center(c, b)};
  }
  return CenterSet(std::move(by_colour), std::move(g));
}

OmegaTriangle omega_triangle(const Triangle& t) {
  BracketSet b = brackets(t);
  Point ob = orthocenter(Colour::blue, b);
  Point orr = orthocenter(Colour::red, b);
  Point og = orthocenter(Colour::green, b);
  if (collinear(ob, orr, og)) throw OmegaDegenerate();
  OmegaTriangle omega{Triangle(ob, orr, og)};
  if (midpoint(orr, og) != circumcenter(Colour::blue, b) || midpoint(ob, og) != circumcenter(Colour::red, b) ||
      midpoint(ob, orr) != circumcenter(Colour::green, b)) {
    throw std::logic_error("omega side midpoints are not the circumcenters");
  }
  if (centroid(omega.vertices) != centroid(t)) throw std::logic_error("omega centroid differs from G");
  return omega;
}

}  // namespace chromo
