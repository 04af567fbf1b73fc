#include "chromo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace chromo {

namespace {

struct Vec {
  double x, y;
};

Vec to_vec(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string_view stroke(Colour c) {
  switch (c) {
    case Colour::blue:
      return kBlueStroke;
    case Colour::red:
      return kRedStroke;
    case Colour::green:
      return kGreenStroke;
  }
  return "#000000";
}

char suffix(Colour c) { return to_string(c).front(); }

// World-to-pixel mapping with y pointing up in world coordinates.
class Viewport {
 public:
  Viewport(double min_x, double min_y, double max_x, double max_y, int width)
      : min_x_(min_x), min_y_(min_y), max_x_(max_x), max_y_(max_y) {
    scale_ = width / (max_x - min_x);
    width_ = width;
    height_ = static_cast<int>(std::lround((max_y - min_y) * scale_));
  }

  Vec map(Vec p) const { return {(p.x - min_x_) * scale_, (max_y_ - p.y) * scale_}; }
  double scale() const { return scale_; }
  int width() const { return width_; }
  int height() const { return height_; }
  double span() const { return std::max(max_x_ - min_x_, max_y_ - min_y_); }
  Vec center() const { return {(min_x_ + max_x_) / 2, (min_y_ + max_y_) / 2}; }

  /// Clips the infinite line through `p` with direction `d` to the world box.
  std::optional<std::pair<Vec, Vec>> clip_line(Vec p, Vec d) const {
    double t0 = -std::numeric_limits<double>::infinity(), t1 = std::numeric_limits<double>::infinity();
    auto edge = [&](double pos, double dir, double lo, double hi) {
      if (dir == 0) return pos >= lo && pos <= hi;
      double a = (lo - pos) / dir, b = (hi - pos) / dir;
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
      return t0 <= t1;
    };
    if (!edge(p.x, d.x, min_x_, max_x_) || !edge(p.y, d.y, min_y_, max_y_)) return std::nullopt;
    return std::make_pair(Vec{p.x + t0 * d.x, p.y + t0 * d.y}, Vec{p.x + t1 * d.x, p.y + t1 * d.y});
  }

 private:
  double min_x_, min_y_, max_x_, max_y_;
  double scale_;
  int width_, height_;
};

std::string num(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << (v == 0 ? 0.0 : v);
  return s.str();
}

// Two branches of a red or green circle in world coordinates.
std::array<std::vector<Vec>, 2> hyperbola_branches(const Circle& c, double reach) {
  const Vec o = to_vec(c.center);
  const double k = c.K.to_double();
  std::array<std::vector<Vec>, 2> branches;
  if (k == 0) {
    // Pair of null lines through the center.
    for (int i = 0; i < kBranchSamples; ++i) {
      double s = -reach + 2 * reach * i / (kBranchSamples - 1);
      if (c.colour == Colour::red) {
        branches[0].push_back({o.x + s, o.y + s});
        branches[1].push_back({o.x + s, o.y - s});
      } else {
        branches[0].push_back({o.x + s, o.y});
        branches[1].push_back({o.x, o.y + s});
      }
    }
    return branches;
  }
  // Red: u = t + K/(4t), v = t - K/(4t). Green: u = t, v = K/(2t).
  const double denom = c.colour == Colour::red ? 4.0 : 2.0;
  const double t_max = reach;
  const double t_min = std::min(t_max, std::abs(k) / (denom * reach));
  const double ratio = t_max / t_min;
  for (int b = 0; b < 2; ++b) {
    const double sign = b == 0 ? 1.0 : -1.0;
    for (int i = 0; i < kBranchSamples; ++i) {
      double t = sign * t_min * std::pow(ratio, static_cast<double>(i) / (kBranchSamples - 1));
      Vec uv = c.colour == Colour::red ? Vec{t + k / (4 * t), t - k / (4 * t)} : Vec{t, k / (2 * t)};
      branches[b].push_back({o.x + uv.x, o.y + uv.y});
    }
  }
  return branches;
}

void emit_circle(std::ostringstream& out, const Circle& c, const Viewport& vp, double reach, double stroke_width,
                 std::string_view kind) {
  const std::string cls = std::string(kind) + " " + std::string(to_string(c.colour));
  if (c.colour == Colour::blue) {
    const double k = c.K.to_double();
    if (k <= 0) {
      out << "    <!-- " << cls << " has non-positive quadrance " << c.K.format() << " -->\n";
      return;
    }
    Vec p = vp.map(to_vec(c.center));
    double r = std::sqrt(k) * vp.scale();
    out << "    <ellipse class=\"" << cls << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" rx=\"" << num(r)
        << "\" ry=\"" << num(r) << "\" fill=\"none\" stroke=\"" << stroke(c.colour) << "\" stroke-width=\""
        << num(stroke_width) << "\"/>\n";
    return;
  }
  out << "    <path class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke(c.colour) << "\" stroke-width=\""
      << num(stroke_width) << "\" d=\"";
  for (const auto& branch : hyperbola_branches(c, reach)) {
    bool first = true;
    for (const Vec& w : branch) {
      Vec p = vp.map(w);
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
      out << (first ? "M" : " L") << num(p.x) << "," << num(p.y);
      first = false;
    }
    out << " ";
  }
  out << "\"/>\n";
}

void emit_marker(std::ostringstream& out, std::string_view cls, const Point& p, const Viewport& vp,
                 std::string_view colour, const std::string& label) {
  Vec m = vp.map(to_vec(p));
  out << "    <circle class=\"" << cls << "\" cx=\"" << num(m.x) << "\" cy=\"" << num(m.y) << "\" r=\"3\" fill=\"" << colour
      << "\"/>\n";
  out << "    <text x=\"" << num(m.x + 5) << "\" y=\"" << num(m.y - 5) << "\" font-size=\"12\" fill=\"" << colour
      << "\">" << label << "</text>\n";
}

}  // namespace

SvgOptions parse_svg_elements(std::string_view text) {
  SvgOptions o{false, false, false, false};
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (item == "all") {
      o.euler = o.circumcircles = o.nine_point = o.centers = true;
    } else if (item == "euler") {
      o.euler = true;
    } else if (item == "circumcircles") {
      o.circumcircles = true;
    } else if (item == "ninepoint") {
      o.nine_point = true;
    } else if (item == "centers") {
      o.centers = true;
    } else {
      throw ParseError("unknown svg element '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return o;
}

std::string render_svg(const Triangle& t, const SvgOptions& options) {
  if (!t.field().is_rational()) throw InvalidField("SVG output needs rational coordinates");
  if (options.width <= 0) throw Error("width must be positive");

  const BracketSet b = brackets(t);
  std::array<ColourCenters, 3> centers;
  for (Colour c : kColours) {
    centers[static_cast<int>(c)] = {orthocenter(c, b), circumcenter(c, b), nine_point_center(c, b)};
  }
  const Point g = centroid(t);

  std::vector<Vec> box_points;
  for (const Point& p : t.points()) box_points.push_back(to_vec(p));
  if (options.centers || options.euler) {
    for (const auto& k : centers) {
      box_points.push_back(to_vec(k.O));
      box_points.push_back(to_vec(k.C));
      box_points.push_back(to_vec(k.N));
    }
    box_points.push_back(to_vec(g));
  }
  double min_x = box_points[0].x, max_x = min_x, min_y = box_points[0].y, max_y = min_y;
  for (const Vec& v : box_points) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const double mx = 0.2 * (max_x - min_x), my = 0.2 * (max_y - min_y);
  const Viewport vp(min_x - mx, min_y - my, max_x + mx, max_y + my, options.width);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << vp.width() << "\" height=\""
      << vp.height() << "\" viewBox=\"0 0 " << vp.width() << " " << vp.height() << "\">\n";
  out << "  <defs>\n    <clipPath id=\"viewport\">\n      <rect x=\"0\" y=\"0\" width=\"" << vp.width()
      << "\" height=\"" << vp.height() << "\"/>\n    </clipPath>\n  </defs>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << vp.width() << "\" height=\"" << vp.height() << "\" fill=\"white\"/>\n";

  // Far enough that sampled branches leave the viewport in both directions.
  const Vec mid = vp.center();
  double reach = vp.span();
  for (const auto& k : centers) {
    for (const Point* p : {&k.C, &k.N}) {
      Vec v = to_vec(*p);
      reach = std::max(reach, 2 * (std::abs(v.x - mid.x) + std::abs(v.y - mid.y) + vp.span()));
    }
  }

  if (options.circumcircles) {
    out << "  <g id=\"circumcircles\" clip-path=\"url(#viewport)\">\n";
    for (Colour c : kColours) emit_circle(out, circumcircle(c, t), vp, reach, 1.2, "circumcircle");
    out << "  </g>\n";
  }
  if (options.nine_point) {
    out << "  <g id=\"nine-point-circles\" clip-path=\"url(#viewport)\">\n";
    for (Colour c : kColours) emit_circle(out, nine_point_circle(c, t), vp, reach, 2.4, "nine-point");
    out << "  </g>\n";
  }
  if (options.euler) {
    out << "  <g id=\"euler-lines\">\n";
    for (Colour c : kColours) {
      const ColourCenters& k = centers[static_cast<int>(c)];
      if (k.O == k.C) {
        out << "    <!-- " << to_string(c) << " Euler line is degenerate -->\n";
        continue;
      }
      Vec o = to_vec(k.O), cc = to_vec(k.C);
      auto seg = vp.clip_line(o, {cc.x - o.x, cc.y - o.y});
      if (!seg) continue;
      Vec p = vp.map(seg->first), q = vp.map(seg->second);
      out << "    <line class=\"euler " << to_string(c) << "\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y)
          << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y) << "\" stroke=\"" << stroke(c)
          << "\" stroke-width=\"1.5\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g id=\"triangle\">\n";
  {
    Vec a = vp.map(to_vec(t.a1())), bb = vp.map(to_vec(t.a2())), c = vp.map(to_vec(t.a3()));
    out << "    <polygon points=\"" << num(a.x) << "," << num(a.y) << " " << num(bb.x) << "," << num(bb.y) << " "
        << num(c.x) << "," << num(c.y) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    for (int i = 0; i < 3; ++i) emit_marker(out, "vertex", t[i], vp, "#000000", "A" + std::to_string(i + 1));
  }
  out << "  </g>\n";

  if (options.centers) {
    out << "  <g id=\"centers\">\n";
    for (Colour c : kColours) {
      const ColourCenters& k = centers[static_cast<int>(c)];
      const std::string sub = std::string("_") + suffix(c);
      emit_marker(out, "center", k.O, vp, stroke(c), "O" + sub);
      emit_marker(out, "center", k.C, vp, stroke(c), "C" + sub);
      emit_marker(out, "center", k.N, vp, stroke(c), "N" + sub);
    }
    emit_marker(out, "center", g, vp, "#000000", "G");
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chromo
