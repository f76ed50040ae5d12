#pragma once

#include <array>
#include <string>

#include "document.hpp"

namespace qtrop::cli {

// Window as {x0, y0, x1, y1} in curve coordinates, y axis pointing up.
// Deterministic output: exact decimal rounding, fixed element order.
// Throws std::domain_error on an empty window.
std::string render_svg(const CurveDocument& doc,
                       const std::array<Rational, 4>& window, long scale);

// Default window: bounding box of the vertices (or line anchors), padded.
std::array<Rational, 4> default_window(const CurveDocument& doc);

}  // namespace qtrop::cli
