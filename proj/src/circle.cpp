#include "chromo/circle.hpp"

namespace chromo {

bool on_circle(const Point& p, const Circle& c) { return quadrance(c.colour, c.center, p) == c.K; }

Circle circumcircle(Colour c, const Triangle& t) {
  Point center = circumcenter(c, t);
  Scalar k = quadrance(c, center, t.a1());
  return {c, std::move(center), std::move(k)};
}

Circle nine_point_circle(Colour c, const Triangle& t) { return circumcircle(c, t.midpoint_triangle()); }

namespace {

Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

std::string vertex_name(int i) { return "A" + std::to_string(i + 1); }

}  // namespace

std::vector<NamedCheck> incidence_report(const Triangle& t) {
  BracketSet b = brackets(t);
  std::array<Point, 3> O, C;
  std::array<Circle, 3> circum, nine;
  for (Colour c : kColours) {
    int k = static_cast<int>(c);
    O[k] = orthocenter(c, b);
    C[k] = circumcenter(c, b);
    circum[k] = circumcircle(c, t);
    nine[k] = nine_point_circle(c, t);
  }
  const Triangle mids = t.midpoint_triangle();

  std::vector<NamedCheck> checks;
  checks.reserve(39);
  for (Colour c : kColours) {
    const std::string cname(to_string(c));
    for (Colour other : other_colours(c)) {
      checks.push_back({"O_" + cname.substr(0, 1) + " on " + std::string(to_string(other)) + " circumcircle",
                        outcome_of(on_circle(O[static_cast<int>(c)], circum[static_cast<int>(other)]))});
    }
  }
  for (Colour c : kColours) {
    const int k = static_cast<int>(c);
    const std::string prefix = std::string(to_string(c)) + " nine-point circle through ";
    for (int i = 0; i < 3; ++i) {
      Line side = join(t[(i + 1) % 3], t[(i + 2) % 3]);
      std::string name = prefix + "foot from " + vertex_name(i);
      if (is_null_line(c, side)) {
        checks.push_back({name, Outcome::skipped_null});
      } else {
        checks.push_back({name, outcome_of(on_circle(foot(c, t[i], side), nine[k]))});
      }
    }
    for (int i = 0; i < 3; ++i) {
      checks.push_back({prefix + "mid(O, " + vertex_name(i) + ")", outcome_of(on_circle(midpoint(O[k], t[i]), nine[k]))});
    }
    for (int i = 0; i < 3; ++i) {
      checks.push_back({prefix + "M" + std::to_string(i + 1), outcome_of(on_circle(mids[i], nine[k]))});
    }
    for (Colour other : other_colours(c)) {
      checks.push_back({prefix + "C_" + std::string(to_string(other)).substr(0, 1),
                        outcome_of(on_circle(C[static_cast<int>(other)], nine[k]))});
    }
  }
  return checks;
}

}  // namespace chromo
