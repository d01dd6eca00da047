#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace msg::test {

namespace {

// Directed pebble graph for the (2,3)-sparsity game: every vertex starts
// with 2 pebbles, inserting an edge costs one pebble and needs 4 present on
// its endpoints.
struct PebbleGraph {
    std::vector<int> pebbles;
    std::vector<std::vector<int>> out;

    explicit PebbleGraph(int n) : pebbles(n, 2), out(n) {}

    // Move one pebble to `root` by reversing a directed path to a vertex
    // holding a spare pebble. Pebbles on `keep_a`/`keep_b` are reserved.
    bool pull_pebble(int root, int keep_a, int keep_b) {
        const int n = static_cast<int>(pebbles.size());
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {root};
        seen[root] = 1;
        int found = -1;
        while (!stack.empty() && found < 0) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : out[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                if (w != keep_a && w != keep_b && pebbles[w] > 0) {
                    found = w;
                    break;
                }
                stack.push_back(w);
            }
        }
        if (found < 0) return false;
        --pebbles[found];
        ++pebbles[root];
        for (int v = found; v != root; v = parent[v]) {
            const int p = parent[v];
            out[p].erase(std::find(out[p].begin(), out[p].end(), v));
            out[v].push_back(p);
        }
        return true;
    }
};

} // namespace

int pebble_game_rank(int vertex_count, const std::vector<Edge>& edges) {
    PebbleGraph g(vertex_count);
    int rank = 0;
    for (const Edge& e : edges) {
        while (g.pebbles[e.u] + g.pebbles[e.v] < 4) {
            if (!g.pull_pebble(e.u, e.u, e.v) && !g.pull_pebble(e.v, e.u, e.v)) break;
        }
        if (g.pebbles[e.u] + g.pebbles[e.v] < 4) continue; // dependent edge
        ++rank;
        if (g.pebbles[e.u] > 0) {
            --g.pebbles[e.u];
            g.out[e.u].push_back(e.v);
        } else {
            --g.pebbles[e.v];
            g.out[e.v].push_back(e.u);
        }
    }
    return rank;
}

double procrustes_rms(const std::vector<Point>& from, const std::vector<Point>& to,
                      bool allow_reflection) {
    const int n = static_cast<int>(from.size());
    Point cf{0, 0}, ct{0, 0};
    for (int i = 0; i < n; ++i) {
        cf = cf + from[i];
        ct = ct + to[i];
    }
    cf = (1.0 / n) * cf;
    ct = (1.0 / n) * ct;

    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    for (int i = 0; i < n; ++i) {
        const Point p = from[i] - cf;
        const Point q = to[i] - ct;
        m(0, 0) += q.x * p.x;
        m(0, 1) += q.x * p.y;
        m(1, 0) += q.y * p.x;
        m(1, 1) += q.y * p.y;
    }
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2d d = Eigen::Matrix2d::Identity();
    if (!allow_reflection &&
        (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0)
        d(1, 1) = -1.0;
    const Eigen::Matrix2d rot = svd.matrixU() * d * svd.matrixV().transpose();

    double err2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const Point p = from[i] - cf;
        const double rx = rot(0, 0) * p.x + rot(0, 1) * p.y + ct.x;
        const double ry = rot(1, 0) * p.x + rot(1, 1) * p.y + ct.y;
        const double dx = rx - to[i].x;
        const double dy = ry - to[i].y;
        err2 += dx * dx + dy * dy;
    }
    return std::sqrt(err2 / n);
}

double sampled_segment_separation(const Segment& s, const Segment& t, int steps) {
    double best = distance(s.a, t.a);
    for (int i = 0; i <= steps; ++i) {
        const double u = static_cast<double>(i) / steps;
        const Point p = s.a + u * (s.b - s.a);
        best = std::min(best, point_segment_distance(p, t).dist);
        const Point q = t.a + u * (t.b - t.a);
        best = std::min(best, point_segment_distance(q, s).dist);
    }
    return best;
}

bool point_in_polygon(Point p, const std::vector<Point>& polygon, double boundary_tol) {
    const int n = static_cast<int>(polygon.size());
    for (int i = 0; i < n; ++i) {
        const Segment side{polygon[i], polygon[(i + 1) % n]};
        if (point_segment_distance(p, side).dist <= boundary_tol) return true;
    }
    bool inside = false;
    for (int i = 0, j = n - 1; i < n; j = i++) {
        const Point a = polygon[i];
        const Point b = polygon[j];
        if ((a.y > p.y) != (b.y > p.y) &&
            p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x)
            inside = !inside;
    }
    return inside;
}

Embedding apply_rigid_motion(const Embedding& e, double angle_rad, Point translation,
                             bool reflect) {
    Embedding out = e;
    const double c = std::cos(angle_rad), s = std::sin(angle_rad);
    for (Point& p : out.vertices) {
        Point q = p;
        if (reflect) q.y = -q.y;
        p = {c * q.x - s * q.y + translation.x, s * q.x + c * q.y + translation.y};
    }
    return out;
}

Embedding random_framework(std::mt19937& rng, int vertex_count, int extra_edges) {
    Embedding e;
    std::uniform_real_distribution<double> coord(0.0, 2.0);
    for (int i = 0; i < vertex_count; ++i) e.vertices.push_back({coord(rng), coord(rng)});

    std::vector<Edge> edges;
    for (int v = 1; v < vertex_count; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back(make_edge(v, pick(rng)));
    }
    std::uniform_int_distribution<int> any(0, vertex_count - 1);
    int attempts = 0;
    while (extra_edges > 0 && attempts < 200) {
        ++attempts;
        const int a = any(rng);
        const int b = any(rng);
        if (a == b) continue;
        const Edge cand = make_edge(a, b);
        if (std::find(edges.begin(), edges.end(), cand) != edges.end()) continue;
        edges.push_back(cand);
        --extra_edges;
    }
    std::sort(edges.begin(), edges.end());
    e.edges = edges;
    e.edge_tags.assign(edges.size(), "");
    return e;
}

Embedding triangle_strip(int triangles) {
    // Vertices zig-zag between two rows; every consecutive triple forms a
    // triangle, giving an isostatic framework (E = 2V - 3).
    Embedding e;
    const double h = std::sqrt(3.0) / 2.0;
    for (int i = 0; i <= triangles + 1; ++i)
        e.vertices.push_back({0.5 * i, i % 2 ? h : 0.0});
    for (int i = 0; i + 1 < static_cast<int>(e.vertices.size()); ++i)
        e.edges.push_back(make_edge(i, i + 1));
    for (int i = 0; i + 2 < static_cast<int>(e.vertices.size()); ++i)
        e.edges.push_back(make_edge(i, i + 2));
    std::sort(e.edges.begin(), e.edges.end());
    e.edge_tags.assign(e.edges.size(), "");
    e.name = "strip";
    return e;
}

Embedding unit_triangle() {
    Embedding e;
    e.name = "triangle";
    e.vertices = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
    e.edges = {{0, 1}, {0, 2}, {1, 2}};
    e.edge_tags = {"", "", ""};
    return e;
}

Embedding unit_square_cycle() {
    Embedding e;
    e.name = "square";
    e.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    e.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    e.edge_tags = {"", "", "", ""};
    return e;
}

} // namespace msg::test
