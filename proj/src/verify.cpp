#include "chromo/verify.hpp"

#include <algorithm>
#include <optional>

#include "chromo/laws.hpp"

namespace chromo {

std::string_view to_string(CheckGroup g) {
  switch (g) {
    case CheckGroup::laws:
      return "laws";
    case CheckGroup::identities:
      return "identities";
    case CheckGroup::altitudes:
      return "altitudes";
    case CheckGroup::centers:
      return "centers";
    case CheckGroup::euler:
      return "euler";
    case CheckGroup::omega:
      return "omega";
    case CheckGroup::circles:
      return "circles";
  }
  return "?";
}

std::vector<CheckGroup> all_check_groups() {
  return {CheckGroup::laws,  CheckGroup::identities, CheckGroup::altitudes, CheckGroup::centers,
          CheckGroup::euler, CheckGroup::omega,      CheckGroup::circles};
}

CheckGroup parse_check_group(std::string_view text) {
  for (CheckGroup g : all_check_groups()) {
    if (to_string(g) == text) return g;
  }
  throw ParseError("unknown check group '" + std::string(text) + "'");
}

namespace {

// Index layout of the catalog. Per-colour checks occupy three consecutive
// slots in blue, red, green order.
enum Id : int {
  kTripleQuad = 0,
  kPythagoras = 3,
  kSpreadLaw = 6,
  kCrossLaw = 9,
  kTripleSpread = 12,
  kQuadrea = 15,
  kColouredQuadrances,
  kColouredSpreads,
  kSpreadForms,  // x3
  kAltitudePerpendicularity = kSpreadForms + 3,
  kFootByElimination,  // x3
  kPythagoreanMeans = kFootByElimination + 3,
  kOrthocenterByElimination,  // x3
  kCircumcenterByElimination = kOrthocenterByElimination + 3,
  kNinePointByElimination = kCircumcenterByElimination + 3,
  kCircumcentersAsMidpoints = kNinePointByElimination + 3,
  kNinePointCentersAsMidpoints,
  kEulerRelations,  // x3
  kEulerLine = kEulerRelations + 3,
  kOmegaCentroid = kEulerLine + 3,
  kOmegaMedians,
  kMidpointCollinearities,
  kOmegaParallelSides,
  kOrthocentersOnCircumcircles,
  kNinePointCircle,  // x3
  kNinePointQuadrance = kNinePointCircle + 3,
  kCircumcircleThroughVertices = kNinePointQuadrance + 3,
  kCatalogSize = kCircumcircleThroughVertices + 3,
};

std::vector<CheckInfo> build_catalog() {
  std::vector<CheckInfo> cat(kCatalogSize);
  auto one = [&](int id, std::string name, CheckGroup g) { cat[id] = {std::move(name), g}; };
  auto per_colour = [&](int id, const std::string& name, CheckGroup g) {
    for (Colour c : kColours) cat[id + static_cast<int>(c)] = {name + "." + std::string(to_string(c)), g};
  };
  per_colour(kTripleQuad, "triple_quad", CheckGroup::laws);
  per_colour(kPythagoras, "pythagoras", CheckGroup::laws);
  per_colour(kSpreadLaw, "spread_law", CheckGroup::laws);
  per_colour(kCrossLaw, "cross_law", CheckGroup::laws);
  per_colour(kTripleSpread, "triple_spread", CheckGroup::laws);
  one(kQuadrea, "quadrea", CheckGroup::identities);
  one(kColouredQuadrances, "coloured_quadrances", CheckGroup::identities);
  one(kColouredSpreads, "coloured_spreads", CheckGroup::identities);
  per_colour(kSpreadForms, "spread_forms", CheckGroup::identities);
  one(kAltitudePerpendicularity, "altitude_perpendicularity", CheckGroup::altitudes);
  per_colour(kFootByElimination, "foot_by_elimination", CheckGroup::altitudes);
  one(kPythagoreanMeans, "pythagorean_means", CheckGroup::altitudes);
  per_colour(kOrthocenterByElimination, "orthocenter_by_elimination", CheckGroup::centers);
  per_colour(kCircumcenterByElimination, "circumcenter_by_elimination", CheckGroup::centers);
  per_colour(kNinePointByElimination, "nine_point_center_by_elimination", CheckGroup::centers);
  one(kCircumcentersAsMidpoints, "circumcenters_as_midpoints", CheckGroup::centers);
  one(kNinePointCentersAsMidpoints, "nine_point_centers_as_midpoints", CheckGroup::centers);
  per_colour(kEulerRelations, "euler_relations", CheckGroup::euler);
  per_colour(kEulerLine, "euler_line", CheckGroup::euler);
  one(kOmegaCentroid, "omega_centroid", CheckGroup::omega);
  one(kOmegaMedians, "omega_medians", CheckGroup::omega);
  one(kMidpointCollinearities, "midpoint_collinearities", CheckGroup::omega);
  one(kOmegaParallelSides, "omega_parallel_sides", CheckGroup::omega);
  one(kOrthocentersOnCircumcircles, "orthocenters_on_circumcircles", CheckGroup::circles);
  per_colour(kNinePointCircle, "nine_point_circle", CheckGroup::circles);
  per_colour(kNinePointQuadrance, "nine_point_quadrance", CheckGroup::circles);
  per_colour(kCircumcircleThroughVertices, "circumcircle_through_vertices", CheckGroup::circles);
  return cat;
}

// Folds several instances of one check into a single outcome.
class Tally {
 public:
  void add(bool ok) { ok ? ++passed_ : ++failed_; }
  Outcome outcome() const {
    if (failed_) return Outcome::fail;
    return passed_ ? Outcome::pass : Outcome::skipped_null;
  }

 private:
  int passed_ = 0;
  int failed_ = 0;
};

int idx(Colour c) { return static_cast<int>(c); }

bool selected(std::span<const CheckGroup> groups, CheckGroup g) {
  return std::find(groups.begin(), groups.end(), g) != groups.end();
}

// Side opposite vertex i: l1 = A2A3, l2 = A1A3, l3 = A1A2.
Line side(const Triangle& t, int i) { return join(t[(i + 1) % 3], t[(i + 2) % 3]); }

void laws_checks(const Triangle& t, std::span<Outcome> out) {
  for (Colour c : kColours) {
    const TriangleMeasures m = measures(c, t);
    out[kTripleQuad + idx(c)] = triple_quad_holds(m.Q[0], m.Q[1], m.Q[2]) ? Outcome::fail : Outcome::pass;

    Tally pyth;
    for (int k = 0; k < 3; ++k) {
      const Point& apex = t[k];
      bool perp = perpendicular(c, join(apex, t[(k + 1) % 3]), join(apex, t[(k + 2) % 3]));
      pyth.add(perp == pythagoras_holds(m.Q[(k + 1) % 3], m.Q[(k + 2) % 3], m.Q[k]));
    }
    out[kPythagoras + idx(c)] = pyth.outcome();

    if (m.all_spreads_defined()) {
      out[kSpreadLaw + idx(c)] = spread_law_holds(m) ? Outcome::pass : Outcome::fail;
      out[kTripleSpread + idx(c)] = triple_spread_holds(*m.s[0], *m.s[1], *m.s[2]) ? Outcome::pass : Outcome::fail;
    } else {
      out[kSpreadLaw + idx(c)] = Outcome::skipped_null;
      out[kTripleSpread + idx(c)] = Outcome::skipped_null;
    }
    Tally cross;
    for (int k = 1; k <= 3; ++k) {
      if (m.s[k - 1]) cross.add(cross_law_holds(m, k));
    }
    out[kCrossLaw + idx(c)] = cross.outcome();
  }
}

void identity_checks(const Triangle& t, std::span<Outcome> out) {
  const Scalar area4 = quadrea_from_area(Colour::blue, t);
  const Scalar ab = quadrea(Colour::blue, t);
  out[kQuadrea] = (ab == area4 && quadrea(Colour::red, t) == -ab && quadrea(Colour::green, t) == -ab)
                      ? Outcome::pass
                      : Outcome::fail;

  Tally cq;
  for (int i = 0; i < 3; ++i) {
    const Point& p = t[(i + 1) % 3];
    const Point& q = t[(i + 2) % 3];
    Scalar b = quadrance(Colour::blue, p, q), r = quadrance(Colour::red, p, q), g = quadrance(Colour::green, p, q);
    cq.add(b.squared() == r.squared() + g.squared());
  }
  out[kColouredQuadrances] = cq.outcome();

  Tally cs;
  std::array<Tally, 3> forms;
  for (int k = 0; k < 3; ++k) {
    const Point& apex = t[k];
    const Point& p = t[(k + 1) % 3];
    const Point& q = t[(k + 2) % 3];
    Line l1 = join(apex, p), l2 = join(apex, q);
    bool all_defined = true;
    Scalar reciprocal_sum = t.field().zero();
    for (Colour c : kColours) {
      if (is_null_line(c, l1) || is_null_line(c, l2)) {
        all_defined = false;
        continue;
      }
      Scalar s = spread(c, l1, l2);
      forms[idx(c)].add(s == spread_from_vectors(c, p - apex, q - apex));
      if (!s.is_zero()) reciprocal_sum += s.inverse();
    }
    if (all_defined) cs.add(reciprocal_sum == 2);
  }
  out[kColouredSpreads] = cs.outcome();
  for (Colour c : kColours) out[kSpreadForms + idx(c)] = forms[idx(c)].outcome();
}

void altitude_checks(const Triangle& t, std::span<Outcome> out) {
  Tally perp, means;
  std::array<Tally, 3> feet;
  for (int i = 0; i < 3; ++i) {
    const Point& p = t[i];
    const Line l = side(t, i);
    const Line nb = altitude(Colour::blue, p, l);
    const Line nr = altitude(Colour::red, p, l);
    const Line ng = altitude(Colour::green, p, l);
    perp.add(perpendicular(Colour::green, nb, nr) && perpendicular(Colour::blue, nr, ng) &&
             perpendicular(Colour::red, ng, nb));
    bool all_non_null = true;
    for (Colour c : kColours) {
      if (is_null_line(c, l)) {
        all_non_null = false;
        continue;
      }
      const Line n = altitude(c, p, l);
      Point f = foot(c, p, l);
      feet[idx(c)].add(f == meet(n, l) && lies_on(f, l) && lies_on(p, n) && perpendicular(c, n, l));
    }
    if (all_non_null) {
      FootCoefficients k = foot_coefficients(l);
      Point fb = foot(Colour::blue, p, l), fr = foot(Colour::red, p, l), fg = foot(Colour::green, p, l);
      means.add(k.lambda + k.mu == 1 && fb == k.lambda * fr + k.mu * fg);
    }
  }
  out[kAltitudePerpendicularity] = perp.outcome();
  out[kPythagoreanMeans] = means.outcome();
  for (Colour c : kColours) out[kFootByElimination + idx(c)] = feet[idx(c)].outcome();
}

// Meet of the first two lines, checked to lie on the third.
std::optional<Point> concurrence(const std::array<Line, 3>& lines) {
  Point p = meet(lines[0], lines[1]);
  if (!lies_on(p, lines[2])) return std::nullopt;
  return p;
}

void center_checks(const Triangle& t, const BracketSet& b, std::span<Outcome> out) {
  const Triangle mids = t.midpoint_triangle();
  for (Colour c : kColours) {
    std::array<Line, 3> alts{altitude(c, t[0], side(t, 0)), altitude(c, t[1], side(t, 1)),
                             altitude(c, t[2], side(t, 2))};
    auto o = concurrence(alts);
    out[kOrthocenterByElimination + idx(c)] = (o && *o == orthocenter(c, b)) ? Outcome::pass : Outcome::fail;

    std::array<Line, 3> bis{perpendicular_bisector(c, t[1], t[2]), perpendicular_bisector(c, t[0], t[2]),
                            perpendicular_bisector(c, t[0], t[1])};
    auto cc = concurrence(bis);
    out[kCircumcenterByElimination + idx(c)] = (cc && *cc == circumcenter(c, b)) ? Outcome::pass : Outcome::fail;

    std::array<Line, 3> mbis{perpendicular_bisector(c, mids[1], mids[2]), perpendicular_bisector(c, mids[0], mids[2]),
                             perpendicular_bisector(c, mids[0], mids[1])};
    auto n = concurrence(mbis);
    out[kNinePointByElimination + idx(c)] = (n && *n == nine_point_center(c, b)) ? Outcome::pass : Outcome::fail;
  }
  Tally cm, nm;
  for (Colour c : kColours) {
    auto [u, v] = other_colours(c);
    cm.add(circumcenter(c, b) == midpoint(orthocenter(u, b), orthocenter(v, b)));
    nm.add(nine_point_center(c, b) == midpoint(circumcenter(u, b), circumcenter(v, b)));
  }
  out[kCircumcentersAsMidpoints] = cm.outcome();
  out[kNinePointCentersAsMidpoints] = nm.outcome();
}

void euler_checks(const Triangle& t, const BracketSet& b, std::span<Outcome> out, SpecialCases& special) {
  const bool char3 = t.field().characteristic() == 3;
  std::optional<Point> g;
  if (!char3) g = centroid(t);
  for (Colour c : kColours) {
    Point o = orthocenter(c, b), cc = circumcenter(c, b), n = nine_point_center(c, b);
    if (o == cc) ++special.euler_degenerate;
    if (char3) {
      out[kEulerRelations + idx(c)] = Outcome::skipped_null;
      out[kEulerLine + idx(c)] = Outcome::skipped_null;
      continue;
    }
    const FieldSpec& f = t.field();
    const Scalar third = f.one() / f.from_int(3);
    const Scalar two_thirds = f.from_int(2) / f.from_int(3);
    bool ok = n == midpoint(o, cc) && *g == third * o + two_thirds * cc && *g == third * cc + two_thirds * n &&
              collinear(o, n, *g) && collinear(o, *g, cc) && collinear(o, n, cc);
    out[kEulerRelations + idx(c)] = ok ? Outcome::pass : Outcome::fail;
    if (o == cc) {
      out[kEulerLine + idx(c)] = Outcome::skipped_null;
    } else {
      Line e = euler_line(c, t);
      out[kEulerLine + idx(c)] = (lies_on(*g, e) && lies_on(n, e) && lies_on(o, e) && lies_on(cc, e))
                                     ? Outcome::pass
                                     : Outcome::fail;
    }
  }
}

void omega_checks(const Triangle& t, const BracketSet& b, std::span<Outcome> out, SpecialCases& special) {
  std::array<Point, 3> O, C, N;
  for (Colour c : kColours) {
    O[idx(c)] = orthocenter(c, b);
    C[idx(c)] = circumcenter(c, b);
    N[idx(c)] = nine_point_center(c, b);
  }
  const bool degenerate = collinear(O[0], O[1], O[2]);
  special.omega_degenerate = degenerate;
  const bool char3 = t.field().characteristic() == 3;

  if (degenerate || char3) {
    out[kOmegaCentroid] = Outcome::skipped_null;
  } else {
    Triangle omega(O[0], O[1], O[2]);
    out[kOmegaCentroid] = centroid(omega) == centroid(t) ? Outcome::pass : Outcome::fail;
  }

  Tally medians, collin, par;
  for (Colour c : kColours) {
    auto [u, v] = other_colours(c);
    const Point& ou = O[idx(u)];
    const Point& ov = O[idx(v)];
    collin.add(collinear(ou, C[idx(c)], ov) && collinear(C[idx(u)], N[idx(c)], C[idx(v)]));
    if (ou != ov) {
      // Lines joining circumcenters are parallel to the sides of Omega.
      par.add(C[idx(u)] != C[idx(v)] && parallel(join(C[idx(u)], C[idx(v)]), join(ou, ov)));
    }
    if (!degenerate && O[idx(c)] != C[idx(c)]) {
      Line median = join(O[idx(c)], midpoint(ou, ov));
      medians.add(median == euler_line(c, t));
    }
  }
  out[kOmegaMedians] = medians.outcome();
  out[kMidpointCollinearities] = collin.outcome();
  out[kOmegaParallelSides] = par.outcome();
}

void circle_checks(const Triangle& t, std::span<Outcome> out) {
  const std::vector<NamedCheck> incidences = incidence_report(t);
  // incidence_report lists the six orthocenter checks first, then eleven per colour.
  Tally on_circum;
  for (int i = 0; i < 6; ++i) {
    if (incidences[i].outcome != Outcome::skipped_null) on_circum.add(incidences[i].outcome == Outcome::pass);
  }
  out[kOrthocentersOnCircumcircles] = on_circum.outcome();
  for (Colour c : kColours) {
    Tally nine;
    for (int i = 0; i < 11; ++i) {
      const NamedCheck& check = incidences[6 + 11 * idx(c) + i];
      if (check.outcome != Outcome::skipped_null) nine.add(check.outcome == Outcome::pass);
    }
    out[kNinePointCircle + idx(c)] = nine.outcome();

    Circle circum = circumcircle(c, t);
    Circle ninec = nine_point_circle(c, t);
    out[kNinePointQuadrance + idx(c)] =
        (ninec.K * 4 == circum.K && ninec.center == nine_point_center(c, t)) ? Outcome::pass : Outcome::fail;
    out[kCircumcircleThroughVertices + idx(c)] =
        (on_circle(t[0], circum) && on_circle(t[1], circum) && on_circle(t[2], circum)) ? Outcome::pass
                                                                                          : Outcome::fail;
  }
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = build_catalog();
  return catalog;
}

SpecialCases run_checks(const Triangle& t, std::span<const CheckGroup> groups, std::span<Outcome> out) {
  if (out.size() != check_catalog().size()) throw Error("outcome buffer has the wrong size");
  SpecialCases special;
  if (selected(groups, CheckGroup::laws)) laws_checks(t, out);
  if (selected(groups, CheckGroup::identities)) identity_checks(t, out);
  if (selected(groups, CheckGroup::altitudes)) altitude_checks(t, out);
  const bool need_brackets = selected(groups, CheckGroup::centers) || selected(groups, CheckGroup::euler) ||
                             selected(groups, CheckGroup::omega);
  if (need_brackets) {
    const BracketSet b = brackets(t);
    if (selected(groups, CheckGroup::centers)) center_checks(t, b, out);
    if (selected(groups, CheckGroup::euler)) euler_checks(t, b, out, special);
    if (selected(groups, CheckGroup::omega)) omega_checks(t, b, out, special);
  }
  if (selected(groups, CheckGroup::circles)) circle_checks(t, out);
  return special;
}

void run_collinear_checks(const Point& a1, const Point& a2, const Point& a3, std::span<const CheckGroup> groups,
                          std::span<Outcome> out) {
  if (out.size() != check_catalog().size()) throw Error("outcome buffer has the wrong size");
  if (!selected(groups, CheckGroup::laws)) return;
  for (Colour c : kColours) {
    bool holds = triple_quad_holds(quadrance(c, a2, a3), quadrance(c, a1, a3), quadrance(c, a1, a2));
    out[kTripleQuad + idx(c)] = holds ? Outcome::pass : Outcome::fail;
  }
}

}  // namespace chromo
