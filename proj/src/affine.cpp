#include "chromo/affine.hpp"

namespace chromo {

Point::Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x.field() != y.field()) throw MixedFields();
}

Point::Point(const FieldSpec& field, long long x_, long long y_)
    : x(field.from_int(x_)), y(field.from_int(y_)) {}

Line::Line(Scalar a, Scalar b, Scalar c) {
  if (a.field() != b.field() || a.field() != c.field()) throw MixedFields();
  if (a.is_zero() && b.is_zero()) throw Error("line needs (a, b) != (0, 0)");
  const FieldSpec field = a.field();
  const Scalar& lead = a.is_zero() ? b : a;
  if (field.is_rational()) {
    mpz_class lcm = 1, gcd = 0;
    for (const Scalar* s : {&a, &b, &c}) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s->rational().get_den_mpz_t());
    }
    std::array<mpz_class, 3> ints;
    int i = 0;
    for (const Scalar* s : {&a, &b, &c}) {
      ints[i] = s->rational().get_num() * (lcm / s->rational().get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints[i].get_mpz_t());
      ++i;
    }
    if (sgn(lead.rational()) < 0) gcd = -gcd;
    a_ = Scalar(field, ints[0] / gcd, 1);
    b_ = Scalar(field, ints[1] / gcd, 1);
    c_ = Scalar(field, ints[2] / gcd, 1);
  } else {
    Scalar inv = lead.inverse();
    a_ = a * inv;
    b_ = b * inv;
    c_ = c * inv;
  }
}

std::string Line::to_string() const {
  return "<" + a_.format() + ":" + b_.format() + ":" + c_.format() + ">";
}

Triangle::Triangle(Point a1, Point a2, Point a3) : pts_{std::move(a1), std::move(a2), std::move(a3)} {
  if (collinear(pts_[0], pts_[1], pts_[2])) throw DegenerateTriangle();
}

Triangle Triangle::midpoint_triangle() const {
  return Triangle(midpoint(pts_[1], pts_[2]), midpoint(pts_[0], pts_[2]), midpoint(pts_[0], pts_[1]));
}

bool lies_on(const Point& p, const Line& l) {
  return (l.a() * p.x + l.b() * p.y + l.c()).is_zero();
}

Line join(const Point& p1, const Point& p2) {
  if (p1 == p2) throw CoincidentPoints();
  return Line(p1.y - p2.y, p2.x - p1.x, p1.x * p2.y - p2.x * p1.y);
}

Point meet(const Line& l1, const Line& l2) {
  Scalar det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) throw ParallelLines();
  return {(l1.b() * l2.c() - l2.b() * l1.c()) / det, (l1.c() * l2.a() - l2.c() * l1.a()) / det};
}

bool parallel(const Line& l1, const Line& l2) {
  return (l1.a() * l2.b() - l2.a() * l1.b()).is_zero();
}

bool collinear(const Point& p1, const Point& p2, const Point& p3) {
  Scalar v = p1.x * p2.y - p1.x * p3.y + p2.x * p3.y - p3.x * p2.y + p3.x * p1.y - p2.x * p1.y;
  return v.is_zero();
}

bool concurrent(const Line& l1, const Line& l2, const Line& l3) {
  Scalar v = l1.a() * l2.b() * l3.c() - l1.a() * l3.b() * l2.c() + l2.a() * l3.b() * l1.c() -
             l3.a() * l2.b() * l1.c() + l3.a() * l1.b() * l2.c() - l2.a() * l1.b() * l3.c();
  return v.is_zero();
}

Point midpoint(const Point& p1, const Point& p2) {
  return {(p1.x + p2.x).halve(), (p1.y + p2.y).halve()};
}

Point centroid(const Triangle& t) {
  if (t.field().characteristic() == 3) throw CharacteristicThree();
  Scalar three = t.field().from_int(3);
  return {(t.a1().x + t.a2().x + t.a3().x) / three, (t.a1().y + t.a2().y + t.a3().y) / three};
}

Point lerp(const Point& p, const Point& q, const Scalar& t) {
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

namespace {

struct Permutation {
  std::array<int, 3> image;
  int sign;
};

// Identity followed by the transpositions (23), (12), (23), (12), (23).
constexpr std::array<Permutation, 6> kPermutations{{
    {{0, 1, 2}, +1},
    {{0, 2, 1}, -1},
    {{1, 2, 0}, +1},
    {{2, 1, 0}, -1},
    {{2, 0, 1}, +1},
    {{1, 0, 2}, -1},
}};

Scalar power(const Scalar& s, int e) {
  Scalar r = s.field().one();
  for (int i = 0; i < e; ++i) r *= s;
  return r;
}

}  // namespace

Scalar bracket(const std::array<Point, 3>& pts, const Monomial& m) {
  const FieldSpec& field = pts[0].field();
  Scalar sum = field.zero();
  for (const auto& perm : kPermutations) {
    Scalar term = field.one();
    for (int i = 0; i < 3; ++i) {
      const Point& p = pts[perm.image[i]];
      if (m.x[i]) term *= power(p.x, m.x[i]);
      if (m.y[i]) term *= power(p.y, m.y[i]);
    }
    if (perm.sign > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BracketSet brackets(const Triangle& t) {
  const auto& p = t.points();
  return BracketSet{
      .x1y2 = bracket(p, {.x = {1, 0, 0}, .y = {0, 1, 0}}),
      .x1sq_y2 = bracket(p, {.x = {2, 0, 0}, .y = {0, 1, 0}}),
      .y1sq_y2 = bracket(p, {.x = {0, 0, 0}, .y = {2, 1, 0}}),
      .x1_y2sq = bracket(p, {.x = {1, 0, 0}, .y = {0, 2, 0}}),
      .x1_x2sq = bracket(p, {.x = {1, 2, 0}, .y = {0, 0, 0}}),
      .x1x2y2 = bracket(p, {.x = {1, 1, 0}, .y = {0, 1, 0}}),
      .x1y1y2 = bracket(p, {.x = {1, 0, 0}, .y = {1, 1, 0}}),
      .y1_y2sq = bracket(p, {.x = {0, 0, 0}, .y = {1, 2, 0}}),
      .x1sq_x2 = bracket(p, {.x = {2, 1, 0}, .y = {0, 0, 0}}),
      .x1x2y1 = bracket(p, {.x = {1, 1, 0}, .y = {1, 0, 0}}),
  };
}

}  // namespace chromo
