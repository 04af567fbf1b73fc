#pragma once

#include <array>
#include <string>

#include "chromo/scalar.hpp"

namespace chromo {

/// A point (or vector) [x, y] with both coordinates in one field.
struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_);
  /// Integer coordinates mapped into `field`.
  Point(const FieldSpec& field, long long x_, long long y_);

  const FieldSpec& field() const { return x.field(); }

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

/// The line <a : b : c>, i.e. ax + by + c = 0, stored in canonical form.
///
/// Over the rationals the coefficients are coprime integers with the first
/// nonzero of (a, b) positive. Over F_p the first nonzero of (a, b) is 1.
/// Equal lines therefore compare equal regardless of the proportion given.
class Line {
 public:
  /// Throws Error if a = b = 0.
  Line(Scalar a, Scalar b, Scalar c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const FieldSpec& field() const { return a_.field(); }

  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Scalar a_, b_, c_;
};

/// Three distinct non-collinear points. Construction throws DegenerateTriangle otherwise.
class Triangle {
 public:
  Triangle(Point a1, Point a2, Point a3);

  const Point& a1() const { return pts_[0]; }
  const Point& a2() const { return pts_[1]; }
  const Point& a3() const { return pts_[2]; }
  /// 0-based vertex access.
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::array<Point, 3>& points() const { return pts_; }
  const FieldSpec& field() const { return pts_[0].field(); }

  /// Triangle of side midpoints M1 = mid(A2,A3), M2 = mid(A1,A3), M3 = mid(A1,A2).
  Triangle midpoint_triangle() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<Point, 3> pts_;
};

bool lies_on(const Point& p, const Line& l);

/// The line through two distinct points; throws CoincidentPoints.
Line join(const Point& p1, const Point& p2);

/// Intersection of two lines by elimination; throws ParallelLines.
Point meet(const Line& l1, const Line& l2);

/// True when l1 and l2 have proportional (a, b).
bool parallel(const Line& l1, const Line& l2);

bool collinear(const Point& p1, const Point& p2, const Point& p3);
/// Vanishing of the coefficient determinant; three parallel lines count as concurrent.
bool concurrent(const Line& l1, const Line& l2, const Line& l3);

Point midpoint(const Point& p1, const Point& p2);

/// Throws CharacteristicThree over F_3.
Point centroid(const Triangle& t);

/// Affine combination (1 - t) p + t q.
Point lerp(const Point& p, const Point& q, const Scalar& t);

// ---------------------------------------------------------------------------
// Antisymmetric bracket polynomials.

/// Exponents of a monomial in x1,x2,x3,y1,y2,y3: `x[i]` is the power of x_{i+1}.
struct Monomial {
  std::array<int, 3> x{};
  std::array<int, 3> y{};
};

/// [m]^- : the signed sum of m over all six permutations of the indices 1,2,3,
/// evaluated at the coordinates of the three points.
Scalar bracket(const std::array<Point, 3>& pts, const Monomial& m);

/// Every bracket used by the closed-form center formulas.
struct BracketSet {
  Scalar x1y2;      // [x1 y2]^-   twice the signed area
  Scalar x1sq_y2;   // [x1^2 y2]^-
  Scalar y1sq_y2;   // [y1^2 y2]^-
  Scalar x1_y2sq;   // [x1 y2^2]^-
  Scalar x1_x2sq;   // [x1 x2^2]^-
  Scalar x1x2y2;    // [x1 x2 y2]^-
  Scalar x1y1y2;    // [x1 y1 y2]^-
  Scalar y1_y2sq;   // [y1 y2^2]^-
  Scalar x1sq_x2;   // [x1^2 x2]^-
  Scalar x1x2y1;    // [x1 x2 y1]^-
};

BracketSet brackets(const Triangle& t);

}  // namespace chromo
