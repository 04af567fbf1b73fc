#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromo/chromo.hpp"

namespace py = pybind11;
using namespace chromo;

namespace {

using PointText = std::pair<std::string, std::string>;

Point to_point(const PointText& p, const FieldSpec& field) {
  return {parse_scalar(p.first, field), parse_scalar(p.second, field)};
}

Triangle to_triangle(const std::vector<PointText>& pts, const std::string& field_text) {
  if (pts.size() != 3) throw ParseError("expected three points, got " + std::to_string(pts.size()));
  const FieldSpec field = FieldSpec::parse(field_text);
  return Triangle(to_point(pts[0], field), to_point(pts[1], field), to_point(pts[2], field));
}

Line to_line(const std::tuple<std::string, std::string, std::string>& l, const FieldSpec& field) {
  return Line(parse_scalar(std::get<0>(l), field), parse_scalar(std::get<1>(l), field),
              parse_scalar(std::get<2>(l), field));
}

PointText text(const Point& p) { return {p.x.format(), p.y.format()}; }

std::tuple<std::string, std::string, std::string> text(const Line& l) {
  return {l.a().format(), l.b().format(), l.c().format()};
}

}  // namespace

PYBIND11_MODULE(_chromo, m) {
  m.doc() = "Exact blue, red and green triangle geometry (native core)";

  auto base = py::register_exception<Error>(m, "ChromoError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidField>(m, "InvalidField", base.ptr());
  py::register_exception<MixedFields>(m, "MixedFields", base.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());
  py::register_exception<CharacteristicThree>(m, "CharacteristicThree", base.ptr());
  py::register_exception<DegenerateTriangle>(m, "DegenerateTriangle", base.ptr());
  py::register_exception<CoincidentPoints>(m, "CoincidentPoints", base.ptr());
  py::register_exception<ParallelLines>(m, "ParallelLines", base.ptr());
  py::register_exception<NullLine>(m, "NullLine", base.ptr());
  py::register_exception<UndefinedSpread>(m, "UndefinedSpread", base.ptr());
  py::register_exception<EulerDegenerate>(m, "EulerDegenerate", base.ptr());
  py::register_exception<OmegaDegenerate>(m, "OmegaDegenerate", base.ptr());

  m.def(
      "quadrance",
      [](const std::string& colour, const PointText& p1, const PointText& p2, const std::string& field) {
        const FieldSpec f = FieldSpec::parse(field);
        return quadrance(parse_colour(colour), to_point(p1, f), to_point(p2, f)).format();
      },
      py::arg("colour"), py::arg("p1"), py::arg("p2"), py::arg("field") = "Q");

  m.def(
      "spread",
      [](const std::string& colour, const std::tuple<std::string, std::string, std::string>& l1,
         const std::tuple<std::string, std::string, std::string>& l2, const std::string& field) {
        const FieldSpec f = FieldSpec::parse(field);
        return spread(parse_colour(colour), to_line(l1, f), to_line(l2, f)).format();
      },
      py::arg("colour"), py::arg("l1"), py::arg("l2"), py::arg("field") = "Q");

  m.def(
      "join",
      [](const PointText& p1, const PointText& p2, const std::string& field) {
        const FieldSpec f = FieldSpec::parse(field);
        return text(join(to_point(p1, f), to_point(p2, f)));
      },
      py::arg("p1"), py::arg("p2"), py::arg("field") = "Q");

  m.def(
      "orthocenter",
      [](const std::string& colour, const std::vector<PointText>& pts, const std::string& field) {
        return text(orthocenter(parse_colour(colour), to_triangle(pts, field)));
      },
      py::arg("colour"), py::arg("points"), py::arg("field") = "Q");
  m.def(
      "circumcenter",
      [](const std::string& colour, const std::vector<PointText>& pts, const std::string& field) {
        return text(circumcenter(parse_colour(colour), to_triangle(pts, field)));
      },
      py::arg("colour"), py::arg("points"), py::arg("field") = "Q");
  m.def(
      "nine_point_center",
      [](const std::string& colour, const std::vector<PointText>& pts, const std::string& field) {
        return text(nine_point_center(parse_colour(colour), to_triangle(pts, field)));
      },
      py::arg("colour"), py::arg("points"), py::arg("field") = "Q");
  m.def(
      "euler_line",
      [](const std::string& colour, const std::vector<PointText>& pts, const std::string& field) {
        return text(euler_line(parse_colour(colour), to_triangle(pts, field)));
      },
      py::arg("colour"), py::arg("points"), py::arg("field") = "Q");
  m.def(
      "circumcircle",
      [](const std::string& colour, const std::vector<PointText>& pts, const std::string& field) {
        Circle c = circumcircle(parse_colour(colour), to_triangle(pts, field));
        return std::make_pair(text(c.center), c.K.format());
      },
      py::arg("colour"), py::arg("points"), py::arg("field") = "Q");

  m.def(
      "report_json",
      [](const std::vector<PointText>& pts, const std::string& field) {
        return to_json(make_report(to_triangle(pts, field))).dump();
      },
      py::arg("points"), py::arg("field") = "Q");

  m.def(
      "reverify_json",
      [](const std::string& doc) { return reverify_report(nlohmann::json::parse(doc)); }, py::arg("document"));

  m.def(
      "svg",
      [](const std::vector<PointText>& pts, const std::string& elements, int width) {
        SvgOptions o = parse_svg_elements(elements);
        o.width = width;
        return render_svg(to_triangle(pts, "Q"), o);
      },
      py::arg("points"), py::arg("elements") = "all", py::arg("width") = 800);

  m.def(
      "sweep_json",
      [](std::uint64_t prime, std::uint64_t samples, std::uint64_t seed, const std::vector<std::string>& groups,
         unsigned jobs) {
        SweepOptions o;
        o.prime = prime;
        o.exhaustive = samples == 0;
        o.samples = samples;
        o.seed = seed;
        o.jobs = jobs == 0 ? 1 : jobs;
        if (!groups.empty()) {
          o.groups.clear();
          for (const auto& g : groups) o.groups.push_back(parse_check_group(g));
        }
        SweepSummary s;
        {
          py::gil_scoped_release release;
          s = run_sweep(o);
        }
        return to_json(s, false).dump();
      },
      py::arg("prime"), py::arg("samples") = 0, py::arg("seed") = 1, py::arg("groups") = std::vector<std::string>{},
      py::arg("jobs") = 1);
}
