#include "basiclab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "basiclab/errors.hpp"

namespace basiclab {

namespace {

constexpr double kViewport = 640.0;
constexpr double kMargin = 0.05 * kViewport;

// Fixed-precision formatting keeps the byte output stable.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_plane_figure_svg(const std::vector<Point>& points,
                                    bool connect) {
  if (points.empty()) throw InvalidInput("svg: no points to draw");
  for (const Point& p : points)
    if (p.size() != 2) throw InvalidInput("svg: plane figures only");

  double min_x = points[0][0], max_x = min_x;
  double min_y = points[0][1], max_y = min_y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double span_x = max_x - min_x > 0 ? max_x - min_x : 1.0;
  const double span_y = max_y - min_y > 0 ? max_y - min_y : 1.0;
  const double usable = kViewport - 2.0 * kMargin;

  const auto sx = [&](double x) {
    return kMargin + (x - min_x) / span_x * usable;
  };
  const auto sy = [&](double y) {
    // SVG y grows downward; flip so the ordinate points up.
    return kViewport - kMargin - (y - min_y) / span_y * usable;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"640\" viewBox=\"0 0 640 640\">\n";
  out << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

  if (connect) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      out << "<line x1=\"" << fmt(sx(points[i][0])) << "\" y1=\""
          << fmt(sy(points[i][1])) << "\" x2=\"" << fmt(sx(points[i + 1][0]))
          << "\" y2=\"" << fmt(sy(points[i + 1][1]))
          << "\" stroke=\"black\" stroke-dasharray=\"2,4\"/>\n";
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double cx = sx(points[i][0]);
    const double cy = sy(points[i][1]);
    out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
        << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << fmt(cx + 6.0) << "\" y=\"" << fmt(cy - 6.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\">a_" << (i + 1)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace basiclab
