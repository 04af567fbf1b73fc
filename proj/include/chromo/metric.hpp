#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chromo/affine.hpp"

namespace chromo {

/// One of the three planar metrics. Blue is x^2 + y^2, red x^2 - y^2, green 2xy.
enum class Colour { blue, red, green };

inline constexpr std::array<Colour, 3> kColours{Colour::blue, Colour::red, Colour::green};

std::string_view to_string(Colour c);
/// Throws ParseError on anything other than "blue", "red" or "green".
Colour parse_colour(std::string_view text);

/// The two colours other than `c`, in blue, red, green order.
std::array<Colour, 2> other_colours(Colour c);

/// Symmetric 2x2 Gram matrix of the colour's bilinear form, entries in {-1, 0, 1}.
struct Form {
  int xx, xy, yy;
};
Form form(Colour c);

Scalar dot(Colour c, const Point& v1, const Point& v2);
Scalar quadrance(Colour c, const Point& p1, const Point& p2);

bool is_null_line(Colour c, const Line& l);
bool perpendicular(Colour c, const Line& l1, const Line& l2);

/// Coefficient-form spread between two lines. Throws NullLine naming the
/// first null argument (0 or 1).
Scalar spread(Colour c, const Line& l1, const Line& l2);

/// Spread from direction vectors: 1 - (v1.v2)^2 / (Q(v1) Q(v2)). Throws NullLine.
Scalar spread_from_vectors(Colour c, const Point& v1, const Point& v2);

/// The line through `p` perpendicular (in colour c) to `l`.
Line altitude(Colour c, const Point& p, const Line& l);

/// Foot of the altitude from `p` to `l`. Throws NullLine if `l` is null in c.
Point foot(Colour c, const Point& p, const Line& l);

/// Weights with F_b = lambda F_r + mu F_g for the feet from any point to `l`.
struct FootCoefficients {
  Scalar lambda;
  Scalar mu;
};

/// Throws NullLine if `l` is null in any colour.
FootCoefficients foot_coefficients(const Line& l);

/// Throws CoincidentPoints.
Line perpendicular_bisector(Colour c, const Point& p1, const Point& p2);

}  // namespace chromo
