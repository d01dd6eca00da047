#pragma once

#include "msg/embedding.hpp"

#include <string>

namespace msg {

struct RenderStyle {
    double vertex_radius = 0.03; // units
    double stroke_width = 0.02;  // units
    int highlight_degree = -1;   // fill vertices of this degree in red
};

// SVG 1.1 document, one <line> per edge and one <circle> per vertex. Edges
// tagged "red" get a red stroke. The y axis is flipped so the drawing matches
// the source figures. Output is deterministic for identical input.
std::string render_svg(const Embedding& e, const RenderStyle& style = {});

} // namespace msg
