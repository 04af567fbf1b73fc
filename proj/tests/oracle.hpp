#pragma once

// Test-only reference computations. Everything here works on raw mpq_class
// values and solves small linear systems directly, so it shares no code
// path with the closed-form formulas in the library.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <random>

#include "chromo/chromo.hpp"

namespace oracle {

struct P {
  mpq_class x, y;
};

inline P from(const chromo::Point& p) { return {p.x.rational(), p.y.rational()}; }

inline chromo::Point to_point(const P& p) { return {chromo::Scalar(p.x), chromo::Scalar(p.y)}; }

inline std::string str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

/// Solves [a b; c d] [u v]^T = [e f]^T by Cramer's rule.
inline std::optional<P> solve2(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d,
                               const mpq_class& e, const mpq_class& f) {
  mpq_class det = a * d - b * c;
  if (det == 0) return std::nullopt;
  return P{(e * d - b * f) / det, (a * f - e * c) / det};
}

/// Bilinear form of each colour on raw vectors.
inline mpq_class form(chromo::Colour c, const P& u, const P& v) {
  switch (c) {
    case chromo::Colour::blue:
      return u.x * v.x + u.y * v.y;
    case chromo::Colour::red:
      return u.x * v.x - u.y * v.y;
    case chromo::Colour::green:
      return u.x * v.y + u.y * v.x;
  }
  return 0;
}

inline P sub(const P& a, const P& b) { return {a.x - b.x, a.y - b.y}; }
inline P mid(const P& a, const P& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// The point X with form(X - a1, a2 - a3) = 0 and form(X - a2, a1 - a3) = 0:
/// the intersection of two coloured altitudes, by elimination.
inline std::optional<P> orthocenter(chromo::Colour c, const std::array<P, 3>& a) {
  // form(X, d) = form(a_i, d) is linear in X: X.x * form(e1, d) + X.y * form(e2, d).
  P e1{1, 0}, e2{0, 1};
  P d1 = sub(a[1], a[2]), d2 = sub(a[0], a[2]);
  return solve2(form(c, e1, d1), form(c, e2, d1), form(c, e1, d2), form(c, e2, d2), form(c, a[0], d1),
                form(c, a[1], d2));
}

/// The point X equidistant (coloured quadrance) from all three vertices:
/// form(X, a_j - a_i) = (q(a_j) - q(a_i)) / 2 for two sides.
inline std::optional<P> circumcenter(chromo::Colour c, const std::array<P, 3>& a) {
  P e1{1, 0}, e2{0, 1};
  P d1 = sub(a[1], a[0]), d2 = sub(a[2], a[0]);
  mpq_class r1 = (form(c, a[1], a[1]) - form(c, a[0], a[0])) / 2;
  mpq_class r2 = (form(c, a[2], a[2]) - form(c, a[0], a[0])) / 2;
  return solve2(form(c, e1, d1), form(c, e2, d1), form(c, e1, d2), form(c, e2, d2), r1, r2);
}

inline std::optional<P> nine_point_center(chromo::Colour c, const std::array<P, 3>& a) {
  return circumcenter(c, {mid(a[1], a[2]), mid(a[0], a[2]), mid(a[0], a[1])});
}

/// Circle through three points as the solution of a 3x3 linear system in
/// (u, v, w) where the circle is q(X) - 2 form(X, center) + w = 0; returns
/// (center, K). Solved by Gaussian elimination.
struct CircleSolution {
  P center;
  mpq_class K;
};

inline std::optional<CircleSolution> circle_through(chromo::Colour c, const std::array<P, 3>& a) {
  // Unknowns: center (cx, cy) and w = q(center) - K.
  // q(a_i) - 2 form(a_i, center) + w = 0  ->  2 form(a_i, e1) cx + 2 form(a_i, e2) cy - w = q(a_i).
  P e1{1, 0}, e2{0, 1};
  std::array<std::array<mpq_class, 4>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[i] = {2 * form(c, a[i], e1), 2 * form(c, a[i], e2), mpq_class(-1), form(c, a[i], a[i])};
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  P center{m[0][3] / m[0][0], m[1][3] / m[1][1]};
  mpq_class w = m[2][3] / m[2][2];
  return CircleSolution{center, form(c, center, center) - w};
}

/// Random rational in [-50, 50] with denominator at most 20.
inline mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 20);
  int d = den(rng);
  std::uniform_int_distribution<long> num(-50L * d, 50L * d);
  mpq_class q(num(rng), d);
  q.canonicalize();
  return q;
}

inline chromo::Point random_point(std::mt19937_64& rng) {
  return {chromo::Scalar(random_rational(rng)), chromo::Scalar(random_rational(rng))};
}

/// A random non-collinear rational triangle.
inline chromo::Triangle random_triangle(std::mt19937_64& rng) {
  while (true) {
    chromo::Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (!chromo::collinear(a, b, c)) return chromo::Triangle(a, b, c);
  }
}

/// A random non-collinear triangle over F_p.
inline chromo::Triangle random_triangle(std::mt19937_64& rng, const chromo::FieldSpec& field) {
  std::uniform_int_distribution<long long> coord(0, static_cast<long long>(field.modulus()) - 1);
  while (true) {
    chromo::Point a(field, coord(rng), coord(rng)), b(field, coord(rng), coord(rng)), c(field, coord(rng), coord(rng));
    if (!chromo::collinear(a, b, c)) return chromo::Triangle(a, b, c);
  }
}

inline chromo::Triangle paper_triangle() {
  const auto q = chromo::FieldSpec::rational();
  return chromo::Triangle(chromo::Point(q, 0, 0), chromo::Point(q, 6, 1), chromo::Point(q, 2, 3));
}

inline chromo::Point pt(const char* x, const char* y, const chromo::FieldSpec& f = chromo::FieldSpec::rational()) {
  return {chromo::parse_scalar(x, f), chromo::parse_scalar(y, f)};
}

inline chromo::Scalar q(const char* text) { return chromo::parse_scalar(text, chromo::FieldSpec::rational()); }

inline chromo::Line line(long a, long b, long c, const chromo::FieldSpec& f = chromo::FieldSpec::rational()) {
  return chromo::Line(f.from_int(a), f.from_int(b), f.from_int(c));
}

}  // namespace oracle
