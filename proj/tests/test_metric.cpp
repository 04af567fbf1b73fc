#include <doctest.h>

#include <random>

#include "oracle.hpp"

using namespace chromo;
using oracle::line;
using oracle::pt;

namespace {

const FieldSpec Q = FieldSpec::rational();
constexpr Colour B = Colour::blue, R = Colour::red, G = Colour::green;

// A random line not null in any colour: a, b nonzero and a != +-b.
Line random_generic_line(std::mt19937_64& rng) {
  while (true) {
    Scalar a(oracle::random_rational(rng)), b(oracle::random_rational(rng)), c(oracle::random_rational(rng));
    if (a.is_zero() || b.is_zero() || a == b || a == -b) continue;
    return Line(a, b, c);
  }
}

}  // namespace

TEST_CASE("coloured dot products") {
  CHECK(dot(B, Point(Q, 6, 1), Point(Q, 2, 3)).format() == "15");
  CHECK(dot(R, Point(Q, 6, 1), Point(Q, 2, 3)).format() == "9");
  CHECK(dot(G, Point(Q, 6, 1), Point(Q, 2, 3)).format() == "20");
}

TEST_CASE("coloured quadrances") {
  CHECK(quadrance(B, Point(Q, 0, 0), Point(Q, 6, 1)).format() == "37");
  CHECK(quadrance(R, Point(Q, 0, 0), Point(Q, 6, 1)).format() == "35");
  CHECK(quadrance(G, Point(Q, 0, 0), Point(Q, 6, 1)).format() == "12");
  CHECK(quadrance(R, Point(Q, 0, 0), Point(Q, 1, 1)).is_zero());
  CHECK(quadrance(G, Point(Q, 0, 0), Point(Q, 5, 0)).is_zero());
}

TEST_CASE("null lines") {
  CHECK(is_null_line(G, line(0, 1, -3)));
  CHECK(is_null_line(G, line(1, 0, 7)));
  CHECK(is_null_line(R, line(1, 1, 5)));
  CHECK(is_null_line(R, line(1, -1, 0)));
  CHECK_FALSE(is_null_line(B, line(1, -6, 0)));
  CHECK(is_null_line(B, line(1, 5, 0, FieldSpec::prime(13))));
  CHECK_FALSE(is_null_line(B, line(1, 5, 0, FieldSpec::prime(7))));
}

TEST_CASE("perpendicularity") {
  CHECK(perpendicular(B, line(1, 0, 0), line(0, 1, 0)));
  CHECK(perpendicular(R, line(1, 1, 0), line(1, 1, -4)));
  CHECK(perpendicular(G, line(1, 0, 0), line(1, 0, -2)));
  CHECK_FALSE(perpendicular(G, line(1, 0, 0), line(0, 1, 0)));
  // Red perpendicular of slope 2 has slope 1/2.
  CHECK(perpendicular(R, line(2, -1, 0), line(1, -2, 3)));
}

TEST_CASE("spreads") {
  const Line l1 = line(1, -6, 0), l2 = line(3, -2, 0);
  CHECK(spread(B, l1, l2).format() == "256/481");
  CHECK(spread(R, l1, l2).format() == "256/175");
  CHECK(spread(G, l1, l2).format() == "-16/9");
  CHECK(spread(B, l1, l2).inverse() + spread(R, l1, l2).inverse() + spread(G, l1, l2).inverse() == Scalar(Q, 2));
  for (Colour c : kColours) CHECK(spread(c, l1, l1).is_zero());
  CHECK(spread(B, line(1, 0, 0), line(0, 1, 0)) == Scalar(Q, 1));
}

TEST_CASE("spread of a null line raises NullLine with its argument") {
  try {
    spread(R, line(1, 1, 0), line(1, 0, 0));
    FAIL("expected NullLine");
  } catch (const NullLine& e) {
    CHECK(e.argument() == 0);
  }
  try {
    spread(G, line(1, 1, 0), line(1, 0, 0));
    FAIL("expected NullLine");
  } catch (const NullLine& e) {
    CHECK(e.argument() == 1);
  }
}

TEST_CASE("altitudes and feet") {
  const Line side = line(1, 2, -8);
  const Point origin(Q, 0, 0);
  CHECK(altitude(B, origin, side) == line(2, -1, 0));
  CHECK(altitude(R, origin, side) == line(2, 1, 0));
  CHECK(altitude(G, origin, side) == line(1, -2, 0));
  CHECK(foot(B, origin, side) == pt("8/5", "16/5"));
  CHECK(foot(R, origin, side) == pt("-8/3", "16/3"));
  CHECK(foot(G, origin, side) == Point(Q, 4, 2));
  CHECK(foot(B, Point(Q, 6, 1), side) == Point(Q, 6, 1));
  CHECK(foot(G, Point(Q, 2, 3), side) == Point(Q, 2, 3));
  CHECK_THROWS_AS(foot(R, origin, line(1, -1, 3)), NullLine);
  CHECK_THROWS_AS(foot(G, origin, line(0, 1, 3)), NullLine);
}

TEST_CASE("foot coefficients") {
  auto fc = foot_coefficients(line(1, 2, -8));
  CHECK(fc.lambda.format() == "9/25");
  CHECK(fc.mu.format() == "16/25");
  CHECK(fc.lambda + fc.mu == Scalar(Q, 1));
  const Line side = line(1, 2, -8);
  const Point origin(Q, 0, 0);
  CHECK(fc.lambda * foot(R, origin, side) + fc.mu * foot(G, origin, side) == pt("8/5", "16/5"));
}

TEST_CASE("perpendicular bisectors") {
  CHECK(perpendicular_bisector(B, Point(Q, 0, 0), Point(Q, 6, 1)) == line(12, 2, -37));
  CHECK(perpendicular_bisector(G, Point(Q, 0, 0), Point(Q, 6, 1)) == line(1, 6, -6));
  CHECK(perpendicular_bisector(R, Point(Q, 0, 0), Point(Q, 0, 4)) == line(0, 1, -2));
}

TEST_CASE("coloured quadrance and spread identities on random data") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    Point a = oracle::random_point(rng), b = oracle::random_point(rng);
    Scalar qb = quadrance(B, a, b), qr = quadrance(R, a, b), qg = quadrance(G, a, b);
    CHECK(qb.squared() == qr.squared() + qg.squared());
    Line l1 = random_generic_line(rng), l2 = random_generic_line(rng);
    if (parallel(l1, l2)) continue;
    Scalar sb = spread(B, l1, l2), sr = spread(R, l1, l2), sg = spread(G, l1, l2);
    CHECK(sb.inverse() + sr.inverse() + sg.inverse() == Scalar(Q, 2));
    for (Colour c : kColours) {
      CHECK((spread(c, l1, l2) == Scalar(Q, 1)) == perpendicular(c, l1, l2));
      Point v1(-l1.b(), l1.a()), v2(-l2.b(), l2.a());
      Scalar k1(oracle::random_rational(rng)), k2(oracle::random_rational(rng));
      if (k1.is_zero() || k2.is_zero()) continue;
      CHECK(spread_from_vectors(c, k1 * v1, k2 * v2) == spread(c, l1, l2));
    }
  }
}

TEST_CASE("altitudes are mutually perpendicular across colours") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 500; ++i) {
    Point p = oracle::random_point(rng);
    Line l = random_generic_line(rng);
    Line nb = altitude(B, p, l), nr = altitude(R, p, l), ng = altitude(G, p, l);
    CHECK(perpendicular(G, nb, nr));
    CHECK(perpendicular(B, nr, ng));
    CHECK(perpendicular(R, ng, nb));
    for (Colour c : kColours) {
      Line n = altitude(c, p, l);
      CHECK(lies_on(p, n));
      CHECK(perpendicular(c, n, l));
      CHECK(foot(c, p, l) == meet(n, l));
    }
    auto fc = foot_coefficients(l);
    CHECK(fc.lambda + fc.mu == Scalar(Q, 1));
    CHECK(foot(B, p, l) == fc.lambda * foot(R, p, l) + fc.mu * foot(G, p, l));
  }
}

TEST_CASE("perpendicular bisectors hold the equidistant points") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 300; ++i) {
    Point a = oracle::random_point(rng), b = oracle::random_point(rng);
    if (a == b) continue;
    for (Colour c : kColours) {
      if (quadrance(c, a, b).is_zero() && is_null_line(c, join(a, b))) continue;
      Line l = perpendicular_bisector(c, a, b);
      CHECK(lies_on(midpoint(a, b), l));
      Point x = lerp(midpoint(a, b), midpoint(a, b) + Point(-l.b(), l.a()), Scalar(oracle::random_rational(rng)));
      CHECK(quadrance(c, x, a) == quadrance(c, x, b));
    }
  }
}
