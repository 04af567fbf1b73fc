#include "chromo/metric.hpp"

namespace chromo {

std::string_view to_string(Colour c) {
  switch (c) {
    case Colour::blue:
      return "blue";
    case Colour::red:
      return "red";
    case Colour::green:
      return "green";
  }
  return "?";
}

Colour parse_colour(std::string_view text) {
  for (Colour c : kColours) {
    if (to_string(c) == text) return c;
  }
  throw ParseError("unknown colour '" + std::string(text) + "'");
}

std::array<Colour, 2> other_colours(Colour c) {
  switch (c) {
    case Colour::blue:
      return {Colour::red, Colour::green};
    case Colour::red:
      return {Colour::blue, Colour::green};
    case Colour::green:
      return {Colour::blue, Colour::red};
  }
  return {Colour::red, Colour::green};
}

Form form(Colour c) {
  switch (c) {
    case Colour::blue:
      return {1, 0, 1};
    case Colour::red:
      return {1, 0, -1};
    case Colour::green:
      return {0, 1, 0};
  }
  return {1, 0, 1};
}

namespace {

void accumulate(Scalar& sum, int coefficient, const Scalar& term) {
  if (coefficient > 0) {
    sum += term;
  } else if (coefficient < 0) {
    sum -= term;
  }
}

}  // namespace

Scalar dot(Colour c, const Point& v1, const Point& v2) {
  const Form f = form(c);
  Scalar sum = v1.field().zero();
  accumulate(sum, f.xx, v1.x * v2.x);
  if (f.xy != 0) accumulate(sum, f.xy, v1.x * v2.y + v1.y * v2.x);
  accumulate(sum, f.yy, v1.y * v2.y);
  return sum;
}

Scalar quadrance(Colour c, const Point& p1, const Point& p2) {
  Point d = p2 - p1;
  return dot(c, d, d);
}

bool is_null_line(Colour c, const Line& l) {
  switch (c) {
    case Colour::blue:
      return (l.a() * l.a() + l.b() * l.b()).is_zero();
    case Colour::red:
      return (l.a() * l.a() - l.b() * l.b()).is_zero();
    case Colour::green:
      return (l.a() * l.b()).is_zero();
  }
  return false;
}

bool perpendicular(Colour c, const Line& l1, const Line& l2) {
  switch (c) {
    case Colour::blue:
      return (l1.a() * l2.a() + l1.b() * l2.b()).is_zero();
    case Colour::red:
      return (l1.a() * l2.a() - l1.b() * l2.b()).is_zero();
    case Colour::green:
      return (l1.a() * l2.b() + l1.b() * l2.a()).is_zero();
  }
  return false;
}

Scalar spread(Colour c, const Line& l1, const Line& l2) {
  if (is_null_line(c, l1)) throw NullLine(0, std::string(to_string(c)));
  if (is_null_line(c, l2)) throw NullLine(1, std::string(to_string(c)));
  Scalar cross = l1.a() * l2.b() - l2.a() * l1.b();
  Scalar numerator = cross * cross;
  switch (c) {
    case Colour::blue:
      return numerator / ((l1.a().squared() + l1.b().squared()) * (l2.a().squared() + l2.b().squared()));
    case Colour::red:
      return -numerator / ((l1.a().squared() - l1.b().squared()) * (l2.a().squared() - l2.b().squared()));
    case Colour::green:
      return -numerator / (4 * l1.a() * l2.a() * l1.b() * l2.b());
  }
  return numerator;
}

Scalar spread_from_vectors(Colour c, const Point& v1, const Point& v2) {
  const Point origin(v1.field().zero(), v1.field().zero());
  Scalar q1 = quadrance(c, origin, v1);
  Scalar q2 = quadrance(c, origin, v2);
  if (q1.is_zero()) throw NullLine(0, std::string(to_string(c)));
  if (q2.is_zero()) throw NullLine(1, std::string(to_string(c)));
  Scalar d = dot(c, v1, v2);
  return 1 - d * d / (q1 * q2);
}

Line altitude(Colour c, const Point& p, const Line& l) {
  const Scalar& a = l.a();
  const Scalar& b = l.b();
  switch (c) {
    case Colour::blue:
      return Line(b, -a, -b * p.x + a * p.y);
    case Colour::red:
      return Line(b, a, -b * p.x - a * p.y);
    case Colour::green:
      return Line(a, -b, -a * p.x + b * p.y);
  }
  return l;
}

Point foot(Colour c, const Point& p, const Line& l) {
  if (is_null_line(c, l)) throw NullLine(1, std::string(to_string(c)));
  const Scalar& a = l.a();
  const Scalar& b = l.b();
  const Scalar& cc = l.c();
  const Scalar& x0 = p.x;
  const Scalar& y0 = p.y;
  switch (c) {
    case Colour::blue: {
      Scalar den = a * a + b * b;
      return {(b * b * x0 - a * b * y0 - a * cc) / den, (-a * b * x0 + a * a * y0 - b * cc) / den};
    }
    case Colour::red: {
      Scalar den = a * a - b * b;
      return {(-b * b * x0 - a * b * y0 - cc * a) / den, (a * b * x0 + a * a * y0 + b * cc) / den};
    }
    case Colour::green:
      return {(a * x0 - b * y0 - cc) / (2 * a), (-a * x0 + b * y0 - cc) / (2 * b)};
  }
  return p;
}

FootCoefficients foot_coefficients(const Line& l) {
  for (Colour c : kColours) {
    if (is_null_line(c, l)) throw NullLine(0, std::string(to_string(c)));
  }
  Scalar a2 = l.a().squared();
  Scalar b2 = l.b().squared();
  Scalar den = (a2 + b2).squared();
  return {(a2 - b2).squared() / den, 4 * a2 * b2 / den};
}

Line perpendicular_bisector(Colour c, const Point& p1, const Point& p2) {
  if (p1 == p2) throw CoincidentPoints();
  const Scalar &x1 = p1.x, &y1 = p1.y, &x2 = p2.x, &y2 = p2.y;
  switch (c) {
    case Colour::blue:
      return Line(x1 - x2, y1 - y2, -(x1 * x1 - x2 * x2 + y1 * y1 - y2 * y2).halve());
    case Colour::red:
      return Line(x1 - x2, -(y1 - y2), -(x1 * x1 - x2 * x2 - y1 * y1 + y2 * y2).halve());
    case Colour::green:
      return Line(y2 - y1, x2 - x1, -(y2 * x2 - x1 * y1));
  }
  return join(p1, p2);
}

}  // namespace chromo
