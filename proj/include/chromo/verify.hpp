#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromo/circle.hpp"

namespace chromo {

/// Groups of theorem checks. The sweep and the report select by group name.
enum class CheckGroup { laws, identities, altitudes, centers, euler, omega, circles };

std::string_view to_string(CheckGroup g);
/// Throws ParseError on unknown names.
CheckGroup parse_check_group(std::string_view text);
std::vector<CheckGroup> all_check_groups();

struct CheckInfo {
  std::string name;
  CheckGroup group;
};

/// Every check the battery knows about, in a fixed order. Outcomes returned
/// by the run functions are indexed the same way.
const std::vector<CheckInfo>& check_catalog();

/// Configurations recorded by a battery run that are not failures.
struct SpecialCases {
  int euler_degenerate = 0;  // colours with O = C
  bool omega_degenerate = false;
};

/// Evaluates every check of the selected groups on a triangle. `out` must
/// have check_catalog().size() entries; unselected checks are left
/// untouched. A check made of several instances (vertices, colours, points)
/// fails if any instance fails and is skipped_null only if every instance
/// was skipped.
SpecialCases run_checks(const Triangle& t, std::span<const CheckGroup> groups, std::span<Outcome> out);

/// The checks that apply to collinear triples: the Triple quad formula must
/// hold in every colour. Writes only those entries of `out`.
void run_collinear_checks(const Point& a1, const Point& a2, const Point& a3, std::span<const CheckGroup> groups,
                          std::span<Outcome> out);

}  // namespace chromo
