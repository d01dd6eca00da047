#include "msg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace msg {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string render_svg(const Embedding& e, const RenderStyle& style) {
    // Flip y so the drawing matches the source figures (SVG y grows downward).
    double min_x = e.vertices[0].x, max_x = min_x;
    double min_y = -e.vertices[0].y, max_y = min_y;
    for (const Point& p : e.vertices) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, -p.y);
        max_y = std::max(max_y, -p.y);
    }
    const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
    const double w = (max_x - min_x) + 2 * margin;
    const double h = (max_y - min_y) + 2 * margin;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(min_x - margin) + " " + fmt(min_y - margin) + " " + fmt(w) + " " + fmt(h) +
           "\">\n";

    svg += "<g stroke=\"black\" stroke-width=\"" + fmt(style.stroke_width) +
           "\" stroke-linecap=\"round\">\n";
    for (int i = 0; i < e.edge_count(); ++i) {
        const Point a = e.vertices[e.edges[i].u];
        const Point b = e.vertices[e.edges[i].v];
        const bool red = e.edge_tags[i].find("red") != std::string::npos;
        svg += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(-a.y) + "\" x2=\"" + fmt(b.x) +
               "\" y2=\"" + fmt(-b.y) + "\"";
        if (red) svg += " stroke=\"red\"";
        svg += "/>\n";
    }
    svg += "</g>\n";

    const std::vector<int> deg = e.degrees();
    svg += "<g fill=\"black\">\n";
    for (int v = 0; v < e.vertex_count(); ++v) {
        svg += "<circle cx=\"" + fmt(e.vertices[v].x) + "\" cy=\"" + fmt(-e.vertices[v].y) +
               "\" r=\"" + fmt(style.vertex_radius) + "\"";
        if (style.highlight_degree >= 0 && deg[v] == style.highlight_degree)
            svg += " fill=\"red\"";
        svg += "/>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace msg
