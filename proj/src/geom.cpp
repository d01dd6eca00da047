#include "msg/geom.hpp"

#include "msg/errors.hpp"

#include <algorithm>

namespace msg {

void validate(const TolerancePolicy& tol) {
    const double all[] = {tol.snap_tol,     tol.unit_tol_raw, tol.unit_tol_refined,
                          tol.rank_tol,     tol.sep_warn,     tol.sep_fail,
                          tol.angle_tol};
    for (double v : all)
        if (!(v > 0.0)) throw InputError("tolerances must be strictly positive");
    if (!(tol.sep_fail < tol.sep_warn))
        throw InputError("sep_fail must be below sep_warn");
    if (!(tol.unit_tol_refined < tol.unit_tol_raw))
        throw InputError("unit_tol_refined must be below unit_tol_raw");
}

double distance(Point p, Point q) { return norm(p - q); }

ProjectedDistance point_segment_distance(Point p, const Segment& s) {
    const Point ab = s.b - s.a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - s.a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return {distance(p, s.a + t * ab), t};
}

namespace {

// Sign of the turn a->b->c; 0 on collinear input.
int orientation(Point a, Point b, Point c) {
    const double d = cross(b - a, c - a);
    if (d > 0.0) return 1;
    if (d < 0.0) return -1;
    return 0;
}

bool properly_crossing(const Segment& s, const Segment& t) {
    const int o1 = orientation(s.a, s.b, t.a);
    const int o2 = orientation(s.a, s.b, t.b);
    const int o3 = orientation(t.a, t.b, s.a);
    const int o4 = orientation(t.a, t.b, s.b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

} // namespace

double segment_separation(const Segment& s, const Segment& t) {
    if (properly_crossing(s, t)) return 0.0;
    double d = point_segment_distance(t.a, s).dist;
    d = std::min(d, point_segment_distance(t.b, s).dist);
    d = std::min(d, point_segment_distance(s.a, t).dist);
    d = std::min(d, point_segment_distance(s.b, t).dist);
    return d;
}

double direction_angle(Point from, Point to) {
    if (from.x == to.x && from.y == to.y)
        throw InputError("direction_angle: degenerate edge (coincident endpoints)");
    constexpr double rad_to_deg = 180.0 / 3.141592653589793238462643383279502884;
    double deg = std::atan2(to.y - from.y, to.x - from.x) * rad_to_deg;
    if (deg < 0.0) deg += 360.0;
    if (deg >= 360.0) deg -= 360.0;
    return deg;
}

} // namespace msg
