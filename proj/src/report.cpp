#include "chromo/report.hpp"

#include <iomanip>
#include <sstream>

namespace chromo {

using nlohmann::json;

namespace {

json outcome_json(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return true;
    case Outcome::fail:
      return false;
    case Outcome::skipped_null:
      return "skipped-null";
  }
  return nullptr;
}

std::string outcome_text(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "true";
    case Outcome::fail:
      return "FALSE";
    case Outcome::skipped_null:
      return "skipped-null";
  }
  return "?";
}

std::string point_text(const Point& p) { return "[" + p.x.format() + ", " + p.y.format() + "]"; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Point point_from_json(const json& j, const FieldSpec& field) {
  return {parse_scalar(j.at(0).get<std::string>(), field), parse_scalar(j.at(1).get<std::string>(), field)};
}

}  // namespace

json to_json(const Point& p) { return json::array({p.x.format(), p.y.format()}); }

json to_json(const Line& l) { return json::array({l.a().format(), l.b().format(), l.c().format()}); }

json to_json(const Circle& c) {
  return {{"colour", std::string(to_string(c.colour))}, {"center", to_json(c.center)}, {"K", c.K.format()}};
}

std::array<Point, 3> parse_points(std::string_view text, const FieldSpec& field) {
  std::vector<Point> pts;
  while (true) {
    auto semi = text.find(';');
    std::string_view item = trim(text.substr(0, semi));
    auto comma = item.find(',');
    if (comma == std::string_view::npos) throw ParseError("point '" + std::string(item) + "' is not of the form x,y");
    pts.emplace_back(parse_scalar(trim(item.substr(0, comma)), field), parse_scalar(trim(item.substr(comma + 1)), field));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  if (pts.size() != 3) throw ParseError("expected three points, got " + std::to_string(pts.size()));
  return {pts[0], pts[1], pts[2]};
}

ReportDocument make_report(const Triangle& t) {
  const BracketSet b = brackets(t);
  std::vector<TriangleMeasures> ms;
  std::array<ColourCenters, 3> centers;
  std::array<Circle, 3> circum, nine;
  std::array<std::optional<Line>, 3> euler;
  for (Colour c : kColours) {
    const int k = static_cast<int>(c);
    ms.push_back(measures(c, t));
    centers[k] = {orthocenter(c, b), circumcenter(c, b), nine_point_center(c, b)};
    circum[k] = circumcircle(c, t);
    nine[k] = nine_point_circle(c, t);
    if (centers[k].O != centers[k].C) euler[k] = join(centers[k].O, centers[k].C);
  }
  std::optional<Point> g;
  if (t.field().characteristic() != 3) g = centroid(t);
  std::optional<Triangle> omega;
  if (!collinear(centers[0].O, centers[1].O, centers[2].O)) omega = Triangle(centers[0].O, centers[1].O, centers[2].O);

  std::vector<Outcome> outcomes(check_catalog().size());
  const std::vector<CheckGroup> groups = all_check_groups();
  run_checks(t, groups, outcomes);
  std::vector<NamedCheck> law_checks;
  for (std::size_t i = 0; i < outcomes.size(); ++i) law_checks.push_back({check_catalog()[i].name, outcomes[i]});

  return ReportDocument{
      .field = t.field(),
      .triangle = t,
      .area_bracket = b.x1y2,
      .measures = std::move(ms),
      .centers = std::move(centers),
      .G = std::move(g),
      .circumcircles = std::move(circum),
      .nine_point_circles = std::move(nine),
      .euler_lines = std::move(euler),
      .omega = std::move(omega),
      .incidences = incidence_report(t),
      .law_checks = std::move(law_checks),
  };
}

json to_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = doc.field.to_string();
  j["triangle"] = json::array({to_json(doc.triangle.a1()), to_json(doc.triangle.a2()), to_json(doc.triangle.a3())});
  j["area_bracket"] = doc.area_bracket.format();

  json colours = json::object();
  for (const TriangleMeasures& m : doc.measures) {
    json spreads = json::array();
    for (const auto& s : m.s) spreads.push_back(s ? json(s->format()) : json(nullptr));
    colours[std::string(to_string(m.colour))] = {
        {"quadrances", json::array({m.Q[0].format(), m.Q[1].format(), m.Q[2].format()})},
        {"spreads", spreads},
        {"quadrea", m.quadrea.format()},
    };
  }
  j["colours"] = colours;

  json centers = json::object();
  centers["G"] = doc.G ? to_json(*doc.G) : json(nullptr);
  json circum = json::object(), nine = json::object(), euler = json::object();
  for (Colour c : kColours) {
    const int k = static_cast<int>(c);
    const std::string name(to_string(c));
    centers[name] = {{"O", to_json(doc.centers[k].O)}, {"C", to_json(doc.centers[k].C)}, {"N", to_json(doc.centers[k].N)}};
    circum[name] = to_json(doc.circumcircles[k]);
    nine[name] = to_json(doc.nine_point_circles[k]);
    euler[name] = doc.euler_lines[k] ? to_json(*doc.euler_lines[k]) : json(nullptr);
  }
  j["centers"] = centers;
  j["circles"] = {{"circumcircle", circum}, {"nine_point", nine}};
  j["euler_lines"] = euler;
  if (doc.omega) {
    j["omega"] = {{"vertices", json::array({to_json(doc.omega->a1()), to_json(doc.omega->a2()), to_json(doc.omega->a3())})}};
  } else {
    j["omega"] = {{"vertices", nullptr}};
  }
  json inc = json::object();
  for (const auto& c : doc.incidences) inc[c.name] = outcome_json(c.outcome);
  j["incidences"] = inc;
  json laws = json::object();
  for (const auto& c : doc.law_checks) laws[c.name] = outcome_json(c.outcome);
  j["law_checks"] = laws;
  return j;
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "field: " << doc.field.to_string() << "\n";
  out << "triangle: " << point_text(doc.triangle.a1()) << " " << point_text(doc.triangle.a2()) << " "
      << point_text(doc.triangle.a3()) << "\n";
  out << "[x1y2]^-: " << doc.area_bracket.format() << "\n";
  for (const TriangleMeasures& m : doc.measures) {
    out << "\n" << to_string(m.colour) << "\n";
    out << "  quadrances: " << m.Q[0].format() << ", " << m.Q[1].format() << ", " << m.Q[2].format() << "\n";
    out << "  spreads:   ";
    for (const auto& s : m.s) out << " " << (s ? s->format() : std::string("undefined"));
    out << "\n  quadrea:    " << m.quadrea.format() << "\n";
    const int k = static_cast<int>(m.colour);
    out << "  orthocenter:       " << point_text(doc.centers[k].O) << "\n";
    out << "  circumcenter:      " << point_text(doc.centers[k].C) << "\n";
    out << "  nine-point center: " << point_text(doc.centers[k].N) << "\n";
    out << "  circumcircle K:    " << doc.circumcircles[k].K.format() << "\n";
    out << "  nine-point K:      " << doc.nine_point_circles[k].K.format() << "\n";
    out << "  Euler line:        " << (doc.euler_lines[k] ? doc.euler_lines[k]->to_string() : std::string("degenerate"))
        << "\n";
  }
  out << "\ncentroid G: " << (doc.G ? point_text(*doc.G) : std::string("undefined (characteristic 3)")) << "\n";
  out << "omega triangle: "
      << (doc.omega ? point_text(doc.omega->a1()) + " " + point_text(doc.omega->a2()) + " " +
                          point_text(doc.omega->a3())
                    : std::string("degenerate"))
      << "\n";
  out << "\nincidences:\n";
  for (const auto& c : doc.incidences) out << "  " << c.name << ": " << outcome_text(c.outcome) << "\n";
  out << "\ntheorem checks:\n";
  for (const auto& c : doc.law_checks) out << "  " << c.name << ": " << outcome_text(c.outcome) << "\n";
  return out.str();
}

std::vector<std::string> reverify_report(const json& doc) {
  std::vector<std::string> problems;
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) problems.push_back("schema_version mismatch");
    const FieldSpec field = FieldSpec::parse(doc.at("field").get<std::string>());
    const json& tri = doc.at("triangle");
    Triangle t(point_from_json(tri.at(0), field), point_from_json(tri.at(1), field), point_from_json(tri.at(2), field));
    const json expected = to_json(make_report(t));
    for (const auto& [key, value] : expected.items()) {
      if (!doc.contains(key)) {
        problems.push_back("missing key '" + key + "'");
      } else if (doc.at(key) != value) {
        problems.push_back("value of '" + key + "' does not match recomputation");
      }
    }
    for (const char* section : {"incidences", "law_checks"}) {
      for (const auto& [name, value] : doc.at(section).items()) {
        if (value == false) problems.push_back(std::string(section) + " '" + name + "' is false");
      }
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string("cannot re-verify: ") + e.what());
  }
  return problems;
}

json to_json(const SweepSummary& s, bool include_timing) {
  json checks = json::object();
  for (std::size_t i = 0; i < s.check_names.size(); ++i) {
    checks[s.check_names[i]] = {
        {"passed", s.counts[i].passed}, {"failed", s.counts[i].failed}, {"skipped", s.counts[i].skipped}};
  }
  json ces = json::array();
  for (const auto& ce : s.counterexamples) {
    json pts = json::array();
    for (const auto& p : ce.points) pts.push_back(json::array({std::to_string(p[0]), std::to_string(p[1])}));
    ces.push_back({{"index", ce.index}, {"points", pts}, {"check", ce.check}});
  }
  json j = {
      {"schema_version", kSchemaVersion},
      {"modulus", s.modulus},
      {"mode", s.mode},
      {"enumeration", s.enumeration},
      {"total", s.total},
      {"triangles_checked", s.triangles_checked},
      {"collinear_skipped", s.collinear_skipped},
      {"special_cases", {{"euler_degenerate", s.euler_degenerate}, {"omega_degenerate", s.omega_degenerate}}},
      {"unexpected_errors", s.unexpected_errors},
      {"total_failures", s.total_failures()},
      {"checks", checks},
      {"counterexamples", ces},
  };
  if (include_timing) j["elapsed_seconds"] = s.elapsed_seconds;
  return j;
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "modulus: " << s.modulus << "\nmode: " << s.mode << "\nenumeration: " << s.enumeration << "\n";
  out << "total: " << s.total << "  triangles checked: " << s.triangles_checked
      << "  collinear skipped: " << s.collinear_skipped << "\n";
  out << "euler degenerate (triangle, colour) pairs: " << s.euler_degenerate
      << "  omega degenerate: " << s.omega_degenerate << "  unexpected errors: " << s.unexpected_errors << "\n\n";
  out << std::left << std::setw(40) << "check" << std::right << std::setw(12) << "passed" << std::setw(10) << "failed"
      << std::setw(12) << "skipped" << "\n";
  for (std::size_t i = 0; i < s.check_names.size(); ++i) {
    out << std::left << std::setw(40) << s.check_names[i] << std::right << std::setw(12) << s.counts[i].passed
        << std::setw(10) << s.counts[i].failed << std::setw(12) << s.counts[i].skipped << "\n";
  }
  out << "\ntotal failures: " << s.total_failures() << "\n";
  for (const auto& ce : s.counterexamples) {
    out << "  #" << ce.index << " [" << ce.points[0][0] << "," << ce.points[0][1] << "] [" << ce.points[1][0] << ","
        << ce.points[1][1] << "] [" << ce.points[2][0] << "," << ce.points[2][1] << "]: " << ce.check << "\n";
  }
  out << std::fixed << std::setprecision(2) << "elapsed: " << s.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace chromo
