#pragma once

#include <string>
#include <string_view>

#include "chromo/circle.hpp"

namespace chromo {

struct SvgOptions {
  bool euler = true;
  bool circumcircles = true;
  bool nine_point = true;
  bool centers = true;
  int width = 800;
};

/// Parses a comma-separated element list: any of "euler", "circumcircles",
/// "ninepoint", "centers", or "all". Throws ParseError.
SvgOptions parse_svg_elements(std::string_view text);

/// SVG 1.1 drawing of a rational triangle with its coloured Euler lines,
/// circles and centers. Exact values are converted to double only when
/// coordinates are written. Throws InvalidField for a non-rational triangle.
std::string render_svg(const Triangle& t, const SvgOptions& options);

inline constexpr std::string_view kBlueStroke = "#0066cc";
inline constexpr std::string_view kRedStroke = "#cc0000";
inline constexpr std::string_view kGreenStroke = "#00a000";

/// Samples per hyperbola branch.
inline constexpr int kBranchSamples = 256;

}  // namespace chromo
