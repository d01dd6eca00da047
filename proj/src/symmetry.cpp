#include "msg/symmetry.hpp"

#include "msg/errors.hpp"
#include "point_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace msg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double rad_to_deg = 180.0 / pi;

struct Isometry {
    // x' = m00 x + m01 y, y' = m10 x + m11 y applied about the centroid
    double m00, m01, m10, m11;

    static Isometry rotation(double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c, -s, s, c};
    }
    static Isometry reflection(double axis_angle) {
        const double c = std::cos(2.0 * axis_angle), s = std::sin(2.0 * axis_angle);
        return {c, s, s, -c};
    }
    Point apply(Point rel) const {
        return {m00 * rel.x + m01 * rel.y, m10 * rel.x + m11 * rel.y};
    }
};

// Vertex permutation induced by the isometry, or empty when some vertex has
// no image within tol or the edge set is not preserved.
std::vector<int> induced_permutation(const Embedding& e, const detail::PointGrid& grid,
                                     Point centroid, const Isometry& iso, double tol) {
    const int nv = e.vertex_count();
    std::vector<int> perm(nv, -1);
    std::vector<char> used(nv, 0);
    for (int i = 0; i < nv; ++i) {
        const Point q = centroid + iso.apply(e.vertices[i] - centroid);
        const int j = grid.nearest_within(q, tol);
        if (j < 0 || used[j]) return {};
        perm[i] = j;
        used[j] = 1;
    }
    for (const Edge& edge : e.edges)
        if (!e.has_edge(perm[edge.u], perm[edge.v])) return {};
    return perm;
}

} // namespace

SymmetryReport isometry_group(const Embedding& e, const TolerancePolicy& tol) {
    if (e.vertex_count() < 3) throw InputError("isometry_group: needs at least 3 vertices");

    const int nv = e.vertex_count();
    Point c{0, 0};
    for (const Point& p : e.vertices) c = c + p;
    c = (1.0 / nv) * c;

    std::vector<double> radius(nv);
    int ref = 0;
    for (int i = 0; i < nv; ++i) {
        radius[i] = distance(e.vertices[i], c);
        if (radius[i] > radius[ref]) ref = i;
    }

    detail::PointGrid grid(e.vertices, tol.snap_tol);
    const double ref_angle = std::atan2(e.vertices[ref].y - c.y, e.vertices[ref].x - c.x);

    // Any isometry fixes the centroid and sends the reference vertex to a
    // vertex of the same radius, so these candidates are exhaustive.
    std::set<std::vector<int>> rotation_perms;
    std::vector<double> rotation_angles;
    std::set<std::vector<int>> mirror_perms;
    std::vector<double> mirror_axes;

    for (int w = 0; w < nv; ++w) {
        if (std::abs(radius[w] - radius[ref]) > tol.snap_tol) continue;
        const double w_angle = std::atan2(e.vertices[w].y - c.y, e.vertices[w].x - c.x);

        const double theta = w_angle - ref_angle;
        auto rot = induced_permutation(e, grid, c, Isometry::rotation(theta), tol.snap_tol);
        if (!rot.empty() && rotation_perms.insert(rot).second) {
            double deg = std::fmod(theta * rad_to_deg, 360.0);
            if (deg < 0) deg += 360.0;
            rotation_angles.push_back(deg);
        }

        const double axis = 0.5 * (ref_angle + w_angle);
        auto mir = induced_permutation(e, grid, c, Isometry::reflection(axis), tol.snap_tol);
        if (!mir.empty() && mirror_perms.insert(mir).second) {
            double deg = std::fmod(axis * rad_to_deg, 180.0);
            if (deg < 0) deg += 180.0;
            mirror_axes.push_back(deg);
        }
    }

    SymmetryReport rep;
    rep.centroid = c;
    rep.rotation_order = static_cast<int>(rotation_perms.size());
    std::sort(mirror_axes.begin(), mirror_axes.end());
    rep.mirror_axes_deg = mirror_axes;
    rep.point_symmetric = std::any_of(rotation_angles.begin(), rotation_angles.end(),
                                      [](double a) { return std::abs(a - 180.0) < 0.1; });
    rep.group = (rep.mirror_count() > 0 ? "D" : "C") + std::to_string(rep.rotation_order);
    return rep;
}

OuterShape outer_boundary(const Embedding& e) {
    if (!is_connected(e)) throw InputError("outer_boundary: embedding is disconnected");

    const int nv = e.vertex_count();
    const std::vector<std::vector<int>> adj = e.adjacency();

    int v0 = 0;
    for (int i = 1; i < nv; ++i) {
        if (e.vertices[i].y < e.vertices[v0].y ||
            (e.vertices[i].y == e.vertices[v0].y && e.vertices[i].x < e.vertices[v0].x))
            v0 = i;
    }

    // Most-clockwise edge from the bottom vertex; every neighbor sits at an
    // angle in [0,180], so the smallest angle starts the counterclockwise walk.
    int start = adj[v0][0];
    for (int w : adj[v0])
        if (direction_angle(e.vertices[v0], e.vertices[w]) <
            direction_angle(e.vertices[v0], e.vertices[start]))
            start = w;

    OuterShape shape;
    int u = v0, v = start;
    shape.cycle.push_back(v0);
    const int step_limit = 2 * e.edge_count() + 2;
    for (int steps = 0;; ++steps) {
        if (steps > step_limit)
            throw InputError("outer_boundary: face walk did not close; run verification first");
        const double back = direction_angle(e.vertices[v], e.vertices[u]);
        int next = -1;
        double best = 361.0;
        for (int w : adj[v]) {
            double ccw = std::fmod(direction_angle(e.vertices[v], e.vertices[w]) - back, 360.0);
            if (ccw <= 0.0) ccw += 360.0; // returning edge counts as a full turn
            if (ccw < best) {
                best = ccw;
                next = w;
            }
        }
        if (v == v0 && next == start) break;
        shape.cycle.push_back(v);
        u = v;
        v = next;
    }

    std::vector<char> seen(nv, 0);
    for (int w : shape.cycle) {
        if (seen[w])
            throw InputError("outer_boundary: outer face is not a simple cycle; "
                             "run verification first");
        seen[w] = 1;
    }

    const int m = static_cast<int>(shape.cycle.size());
    for (int i = 0; i < m; ++i) {
        const Point a = e.vertices[shape.cycle[i]];
        const Point b = e.vertices[shape.cycle[(i + 1) % m]];
        const Point c = e.vertices[shape.cycle[(i + 2) % m]];
        shape.positions.push_back(a);
        shape.edge_lengths.push_back(distance(a, b));
        double turn = direction_angle(b, c) - direction_angle(a, b);
        turn = std::fmod(turn, 360.0);
        if (turn > 180.0) turn -= 360.0;
        if (turn <= -180.0) turn += 360.0;
        shape.turn_angles.push_back(turn);
    }
    return shape;
}

SymmetryReport shape_symmetry(const OuterShape& s, const TolerancePolicy& tol) {
    const int m = static_cast<int>(s.cycle.size());
    if (m < 3) throw InputError("shape_symmetry: degenerate outer shape");

    const std::vector<double>& len = s.edge_lengths;
    const std::vector<double>& turn = s.turn_angles;
    // Positions matched within snap_tol shift turn angles of unit-scale edges
    // by up to ~2*snap_tol radians.
    const double angle_tol_deg = 2.0 * tol.snap_tol * rad_to_deg;

    auto shift_matches = [&](int k) {
        for (int i = 0; i < m; ++i) {
            if (std::abs(len[i] - len[(i + k) % m]) > tol.snap_tol) return false;
            if (std::abs(turn[i] - turn[(i + k) % m]) > angle_tol_deg) return false;
        }
        return true;
    };
    // Reversed traversal: edge j of the mirrored polygon is edge m-1-j
    // reversed, and its following turn is turn m-2-j.
    auto reflected_shift_matches = [&](int k) {
        for (int i = 0; i < m; ++i) {
            const int j = (i + k) % m;
            const double rlen = len[((m - 1 - j) % m + m) % m];
            const double rturn = turn[((m - 2 - j) % m + m) % m];
            if (std::abs(len[i] - rlen) > tol.snap_tol) return false;
            if (std::abs(turn[i] - rturn) > angle_tol_deg) return false;
        }
        return true;
    };

    SymmetryReport rep;
    int rotations = 0;
    for (int k = 0; k < m; ++k)
        if (shift_matches(k)) ++rotations;
    rep.rotation_order = rotations;
    // A cyclic group of even order contains the half-turn.
    rep.point_symmetric = rotations > 1 && rotations % 2 == 0;

    Point c{0, 0};
    for (const Point& p : s.positions) c = c + p;
    c = (1.0 / m) * c;
    rep.centroid = c;

    for (int k = 0; k < m; ++k) {
        if (!reflected_shift_matches(k)) continue;
        // This reflection pairs vertex i with vertex (m - i - k) mod m; the
        // axis through the centroid bisects the farthest such pair.
        int best = 0;
        double best_r = -1.0;
        for (int i = 0; i < m; ++i) {
            const double r = distance(s.positions[i], c);
            if (r > best_r) {
                best_r = r;
                best = i;
            }
        }
        const int mate = ((m - best - k) % m + m) % m;
        const Point pi = s.positions[best];
        const Point pj = s.positions[mate];
        const Point mid = 0.5 * (pi + pj) - c;
        double axis;
        if (norm(mid) > tol.snap_tol) {
            axis = std::atan2(mid.y, mid.x) * rad_to_deg;
        } else {
            axis = std::atan2(pj.x - pi.x, -(pj.y - pi.y)) * rad_to_deg; // chord normal
        }
        axis = std::fmod(axis, 180.0);
        if (axis < 0) axis += 180.0;
        rep.mirror_axes_deg.push_back(axis);
    }
    std::sort(rep.mirror_axes_deg.begin(), rep.mirror_axes_deg.end());
    rep.group =
        (rep.mirror_count() > 0 ? "D" : "C") + std::to_string(rep.rotation_order);
    return rep;
}

AngleFan angle_fan(const Embedding& e, int v, Edge start_edge, Orientation orientation) {
    if (v < 0 || v >= e.vertex_count()) throw InputError("angle_fan: no such vertex");
    if (start_edge.u != v && start_edge.v != v)
        throw InputError("angle_fan: start edge is not incident to the vertex");
    if (!e.has_edge(start_edge.u, start_edge.v))
        throw InputError("angle_fan: start edge is not in the embedding");

    const std::vector<std::vector<int>> adj = e.adjacency();
    std::vector<std::pair<double, int>> dirs; // (direction angle, neighbor)
    for (int w : adj[v]) dirs.emplace_back(direction_angle(e.vertices[v], e.vertices[w]), w);
    std::sort(dirs.begin(), dirs.end());

    const int start_nb = start_edge.u == v ? start_edge.v : start_edge.u;
    int s = -1;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        if (dirs[i].second == start_nb) s = static_cast<int>(i);

    const int d = static_cast<int>(dirs.size());
    AngleFan fan;
    fan.vertex = v;
    fan.orientation = orientation;
    auto gap_ccw = [&](int i) {
        double g = dirs[(i + 1) % d].first - dirs[i].first;
        if (g <= 0.0) g += 360.0;
        return g;
    };
    for (int k = 0; k < d; ++k) {
        if (orientation == Orientation::ccw)
            fan.angles.push_back(gap_ccw((s + k) % d));
        else
            fan.angles.push_back(gap_ccw(((s - 1 - k) % d + d) % d));
    }
    return fan;
}

AsymmetryConditions asymmetry_report(const Embedding& e,
                                     const std::vector<Pattern>& patterns,
                                     const TolerancePolicy& tol) {
    AsymmetryConditions a;
    a.rigidity = analyze(e, tol);
    a.rigid = a.rigidity.rigid;
    a.graph_symmetry = isometry_group(e, tol);
    a.graph_symmetry_trivial = a.graph_symmetry.trivial();
    a.shape = shape_symmetry(outer_boundary(e), tol);
    a.shape_symmetry_trivial = a.shape.trivial();
    a.inventory = motif_inventory(e, patterns, tol);
    a.decomposition_note =
        "rigid-block rearrangement is not decided by this tool; the motif "
        "inventory lists the known blocks";
    return a;
}

} // namespace msg
