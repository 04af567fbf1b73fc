#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chromo/laws.hpp"
#include "chromo/sweep.hpp"

namespace chromo {

inline constexpr int kSchemaVersion = 1;

/// Everything the `report` command prints about one triangle.
struct ReportDocument {
  FieldSpec field;
  Triangle triangle;
  Scalar area_bracket;  // [x1y2]^-
  std::vector<TriangleMeasures> measures;  // blue, red, green
  std::array<ColourCenters, 3> centers;
  std::optional<Point> G;  // absent in characteristic three
  std::array<Circle, 3> circumcircles;
  std::array<Circle, 3> nine_point_circles;
  std::array<std::optional<Line>, 3> euler_lines;  // absent when O = C
  std::optional<Triangle> omega;                   // absent when degenerate
  std::vector<NamedCheck> incidences;
  std::vector<NamedCheck> law_checks;  // the full theorem battery
};

ReportDocument make_report(const Triangle& t);

nlohmann::json to_json(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

/// Rebuilds the triangle from a report document, recomputes it, and checks
/// that every value matches and every boolean check is true or skipped.
/// Returns a list of problems; empty means the document verified.
std::vector<std::string> reverify_report(const nlohmann::json& doc);

nlohmann::json to_json(const SweepSummary& s, bool include_timing);
std::string to_text(const SweepSummary& s);

// Serialization of the basic types.
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Line& l);
nlohmann::json to_json(const Circle& c);

/// Parses "x1,y1;x2,y2;x3,y3". Throws ParseError.
std::array<Point, 3> parse_points(std::string_view text, const FieldSpec& field);

}  // namespace chromo
