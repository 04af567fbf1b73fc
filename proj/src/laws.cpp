#include "chromo/laws.hpp"

namespace chromo {

namespace {

std::optional<Scalar> vertex_spread(Colour c, const Point& apex, const Point& p, const Point& q) {
  Line l1 = join(apex, p);
  Line l2 = join(apex, q);
  if (is_null_line(c, l1) || is_null_line(c, l2)) return std::nullopt;
  return spread(c, l1, l2);
}

}  // namespace

TriangleMeasures measures(Colour c, const Triangle& t) {
  const Point &a1 = t.a1(), &a2 = t.a2(), &a3 = t.a3();
  TriangleMeasures m{
      .colour = c,
      .Q = {quadrance(c, a2, a3), quadrance(c, a1, a3), quadrance(c, a1, a2)},
      .s = {vertex_spread(c, a1, a2, a3), vertex_spread(c, a2, a1, a3), vertex_spread(c, a3, a1, a2)},
      .quadrea = t.field().zero(),
  };
  m.quadrea = quadrea(m.Q[0], m.Q[1], m.Q[2]);
  return m;
}

Scalar quadrea(const Scalar& q1, const Scalar& q2, const Scalar& q3) {
  return (q1 + q2 + q3).squared() - 2 * (q1.squared() + q2.squared() + q3.squared());
}

Scalar quadrea(Colour c, const Triangle& t) {
  return quadrea(quadrance(c, t.a2(), t.a3()), quadrance(c, t.a1(), t.a3()), quadrance(c, t.a1(), t.a2()));
}

Scalar quadrea_from_area(Colour c, const Triangle& t) {
  Scalar v = 4 * bracket(t.points(), {.x = {1, 0, 0}, .y = {0, 1, 0}}).squared();
  return c == Colour::blue ? v : -v;
}

bool triple_quad_holds(const Scalar& q1, const Scalar& q2, const Scalar& q3) {
  return quadrea(q1, q2, q3).is_zero();
}

bool pythagoras_holds(const Scalar& q1, const Scalar& q2, const Scalar& q3) { return q1 + q2 == q3; }

bool spread_law_holds(const TriangleMeasures& m) {
  for (int i = 0; i < 3; ++i) {
    if (!m.s[i]) throw UndefinedSpread(i + 1);
  }
  return *m.s[0] * m.Q[1] == *m.s[1] * m.Q[0] && *m.s[1] * m.Q[2] == *m.s[2] * m.Q[1];
}

bool cross_law_holds(const TriangleMeasures& m, int vertex) {
  if (vertex < 1 || vertex > 3) throw Error("vertex must be 1, 2 or 3");
  const int k = vertex - 1;
  const auto& sk = m.s[k];
  if (!sk) throw UndefinedSpread(vertex);
  const Scalar& qi = m.Q[(k + 1) % 3];
  const Scalar& qj = m.Q[(k + 2) % 3];
  const Scalar& qk = m.Q[k];
  return (qi + qj - qk).squared() == 4 * qi * qj * (1 - *sk);
}

bool triple_spread_holds(const Scalar& s1, const Scalar& s2, const Scalar& s3) {
  return (s1 + s2 + s3).squared() == 2 * (s1.squared() + s2.squared() + s3.squared()) + 4 * s1 * s2 * s3;
}

}  // namespace chromo
