#pragma once

#include <string>
#include <vector>

#include "basiclab/core.hpp"

// Deterministic SVG emission for plane arrays and bolts: data coordinates
// scaled to a 640x640 viewport with 5% margins, labels a_1, a_2, ... in lex
// order, dotted axis-parallel connectors between consecutive points. Byte
// output is identical across runs for identical input.

namespace basiclab {

std::string render_plane_figure_svg(const std::vector<Point>& points,
                                    bool connect);

}  // namespace basiclab
