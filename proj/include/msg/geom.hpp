#pragma once

#include <cmath>

namespace msg {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

struct Segment {
    Point a;
    Point b;
};

// Thresholds used by every tolerance-aware predicate. All lengths are in
// units of one edge unless stated otherwise.
struct TolerancePolicy {
    double snap_tol = 1e-3;          // endpoint clustering / matching radius
    double unit_tol_raw = 5e-2;      // relative band for pre-refinement edge lengths
    double unit_tol_refined = 1e-9;  // absolute band for refined edge lengths
    double rank_tol = 1e-8;          // relative singular-value cutoff
    double sep_warn = 1e-3;          // near-contact warning threshold
    double sep_fail = 1e-9;          // contact threshold (counts as intersection)
    double angle_tol = 1e-6;         // degrees; collinear-overlap threshold
};

// Enforces the policy invariants (positive thresholds, sep_fail < sep_warn,
// refined band below the raw band). Throws InputError.
void validate(const TolerancePolicy& tol);

double distance(Point p, Point q);

// Minimum distance between two closed segments; 0 iff they share a point.
double segment_separation(const Segment& s, const Segment& t);

struct ProjectedDistance {
    double dist;
    double param; // clamped projection parameter in [0,1]
};
ProjectedDistance point_segment_distance(Point p, const Segment& s);

// Angle of (to - from) against the +x axis, counterclockwise, in [0,360).
// Throws InputError when from == to.
double direction_angle(Point from, Point to);

} // namespace msg
