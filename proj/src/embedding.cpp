#include "msg/embedding.hpp"

#include "msg/errors.hpp"
#include "point_grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>

namespace msg {

bool Embedding::has_edge(int a, int b) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

std::vector<int> Embedding::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<int>> Embedding::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

double parse_real(const std::string& tok, int line_no) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" +
                         tok + "'");
    if (!std::isfinite(v))
        throw ParseError("line " + std::to_string(line_no) + ": non-finite coordinate");
    return v;
}

} // namespace

SegmentList parse_segments(std::string_view text) {
    SegmentList sl;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string> toks = split_tokens(line);
        if (toks.empty()) continue;

        if (toks[0] == "name") {
            std::string n;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (i > 1) n += ' ';
                n += toks[i];
            }
            sl.source_name = n;
            continue;
        }

        if (toks.size() < 4 || toks.size() > 5)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'x1 y1 x2 y2 [tag]', got " +
                             std::to_string(toks.size()) + " fields");
        Segment s;
        s.a.x = parse_real(toks[0], line_no);
        s.a.y = parse_real(toks[1], line_no);
        s.b.x = parse_real(toks[2], line_no);
        s.b.y = parse_real(toks[3], line_no);
        if (s.a.x == s.b.x && s.a.y == s.b.y)
            throw ParseError("line " + std::to_string(line_no) + ": degenerate segment");
        sl.segments.push_back(s);
        sl.tags.push_back(toks.size() == 5 ? toks[4] : "");
    }
    if (sl.segments.empty()) throw ParseError("no segment data");
    return sl;
}

double estimate_unit(const SegmentList& sl, const TolerancePolicy& tol) {
    if (sl.segments.empty()) throw InputError("estimate_unit: empty segment list");
    std::vector<double> lens(sl.segments.size());
    for (std::size_t i = 0; i < sl.segments.size(); ++i)
        lens[i] = distance(sl.segments[i].a, sl.segments[i].b);
    const double l0 = *std::min_element(lens.begin(), lens.end());

    std::vector<double> per_unit;
    per_unit.reserve(lens.size());
    for (double l : lens) {
        const double k = std::max(1.0, std::round(l / l0));
        per_unit.push_back(l / k);
    }
    std::sort(per_unit.begin(), per_unit.end());
    const std::size_t n = per_unit.size();
    const double unit =
        n % 2 ? per_unit[n / 2] : 0.5 * (per_unit[n / 2 - 1] + per_unit[n / 2]);

    for (std::size_t i = 0; i < lens.size(); ++i) {
        const double k = std::round(lens[i] / unit);
        const bool multiple_ok = k >= 1.0 && k <= 3.0 &&
                                 std::abs(lens[i] - k * unit) <= tol.unit_tol_raw * k * unit;
        if (!multiple_ok)
            throw BuildError("estimate_unit: segment " + std::to_string(i) + " has length " +
                             std::to_string(lens[i]) + ", not an integer multiple (1..3) of " +
                             std::to_string(unit));
    }
    return unit;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Embedding build_embedding(const SegmentList& sl, const TolerancePolicy& tol, BuildMode mode) {
    if (sl.segments.empty()) throw InputError("build_embedding: empty segment list");

    double unit = 0.0;
    if (mode == BuildMode::matchstick) {
        unit = estimate_unit(sl, tol);
    } else {
        unit = distance(sl.segments[0].a, sl.segments[0].b);
        for (const Segment& s : sl.segments) unit = std::min(unit, distance(s.a, s.b));
    }

    // Scale to unit-edge coordinates and flip to a y-up frame.
    const int nseg = static_cast<int>(sl.segments.size());
    std::vector<Point> endpoints(2 * nseg);
    for (int i = 0; i < nseg; ++i) {
        endpoints[2 * i] = {sl.segments[i].a.x / unit, -sl.segments[i].a.y / unit};
        endpoints[2 * i + 1] = {sl.segments[i].b.x / unit, -sl.segments[i].b.y / unit};
    }

    // Single-linkage clustering of endpoints with radius snap_tol.
    detail::PointGrid grid(endpoints, tol.snap_tol);
    UnionFind uf(2 * nseg);
    for (int i = 0; i < 2 * nseg; ++i)
        grid.for_each_within(endpoints[i], tol.snap_tol, [&](int j) {
            if (j != i) uf.unite(i, j);
        });

    std::vector<int> cluster_of(2 * nseg, -1);
    std::vector<Point> positions;
    std::vector<int> cluster_sizes;
    for (int i = 0; i < 2 * nseg; ++i) {
        const int root = uf.find(i);
        if (cluster_of[root] < 0) {
            cluster_of[root] = static_cast<int>(positions.size());
            positions.push_back({0, 0});
            cluster_sizes.push_back(0);
        }
        const int c = cluster_of[root];
        cluster_of[i] = c;
        positions[c] = positions[c] + endpoints[i];
        ++cluster_sizes[c];
    }
    for (std::size_t c = 0; c < positions.size(); ++c)
        positions[c] = (1.0 / cluster_sizes[c]) * positions[c];

    // Distinct clusters closer than 2*snap_tol cannot be told apart reliably.
    detail::PointGrid vgrid(positions, tol.snap_tol);
    for (int c = 0; c < static_cast<int>(positions.size()); ++c) {
        bool ambiguous = false;
        vgrid.for_each_within(positions[c], 2.0 * tol.snap_tol, [&](int d) {
            if (d != c) ambiguous = true;
        });
        if (ambiguous)
            throw BuildError("build_embedding: two vertex clusters closer than twice the snap "
                             "tolerance near (" +
                             std::to_string(positions[c].x) + ", " +
                             std::to_string(positions[c].y) + ")");
    }

    std::map<Edge, std::string> edge_map;
    auto add_edge = [&](int a, int b, const std::string& tag) {
        if (a == b)
            throw BuildError("build_embedding: segment collapsed to a single vertex");
        auto [it, inserted] = edge_map.try_emplace(make_edge(a, b), tag);
        if (!inserted && !tag.empty() && it->second.find(tag) == std::string::npos)
            it->second = it->second.empty() ? tag : it->second + "," + tag;
    };

    for (int i = 0; i < nseg; ++i) {
        const int a = cluster_of[2 * i];
        const int b = cluster_of[2 * i + 1];
        const std::string& tag = sl.tags.size() > static_cast<std::size_t>(i) ? sl.tags[i] : "";
        if (mode == BuildMode::outline) {
            add_edge(a, b, tag);
            continue;
        }
        const double len = distance(positions[a], positions[b]);
        const int k = static_cast<int>(std::round(len));
        if (k < 1 || k > 3)
            throw BuildError("build_embedding: segment " + std::to_string(i) +
                             " has length " + std::to_string(len) + " units");
        int prev = a;
        for (int step = 1; step < k; ++step) {
            const Point expected =
                positions[a] + (static_cast<double>(step) / k) * (positions[b] - positions[a]);
            const int m = vgrid.nearest_within(expected, tol.snap_tol);
            if (m < 0 || m == a || m == b || m == prev)
                throw BuildError("build_embedding: segment " + std::to_string(i) +
                                 " spans " + std::to_string(k) +
                                 " units but has no vertex at an interior division point");
            add_edge(prev, m, tag);
            prev = m;
        }
        add_edge(prev, b, tag);
    }

    Embedding e;
    e.name = sl.source_name;
    e.vertices = positions;
    for (auto& [edge, tag] : edge_map) {
        e.edges.push_back(edge);
        e.edge_tags.push_back(tag);
    }

    if (e.vertex_count() < 2 || e.edge_count() < 1)
        throw BuildError("build_embedding: produced fewer than 2 vertices or 1 edge");
    if (mode == BuildMode::matchstick) {
        for (int i = 0; i < e.edge_count(); ++i) {
            const double len = e.edge_length(i);
            if (std::abs(len - 1.0) > tol.unit_tol_raw)
                throw BuildError("build_embedding: edge " + std::to_string(i) + " has length " +
                                 std::to_string(len) + ", outside the raw unit band");
        }
    }
    return e;
}

ProfileCheck check_degree_profile(const Embedding& e, int m, int n) {
    ProfileCheck pc;
    pc.profile.m = m;
    pc.profile.n = n;
    const std::vector<int> deg = e.degrees();
    for (int v = 0; v < e.vertex_count(); ++v) {
        if (deg[v] == m) {
            ++pc.profile.count_m;
        } else if (deg[v] == n) {
            ++pc.profile.count_n;
        } else {
            pc.offenders.push_back(v);
        }
    }
    if (m == n) {
        pc.profile.count_m += pc.profile.count_n; // single-degree profile
        pc.profile.count_n = 0;
    }
    pc.ok = pc.offenders.empty();
    return pc;
}

DegreeProfile degree_profile(const Embedding& e, int m, int n) {
    ProfileCheck pc = check_degree_profile(e, m, n);
    if (!pc.ok) {
        std::string msg = "degree_profile: vertices with degree outside {" +
                          std::to_string(m) + "," + std::to_string(n) + "}:";
        for (int v : pc.offenders) msg += " " + std::to_string(v);
        throw InputError(msg);
    }
    return pc.profile;
}

bool is_connected(const Embedding& e) {
    const int n = e.vertex_count();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj = e.adjacency();
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

std::string write_embedding(const Embedding& e) {
    std::string out;
    char buf[128];
    if (!e.name.empty()) {
        out += "name " + e.name + "\n";
    }
    out += "unit 1.0\n";
    for (int v = 0; v < e.vertex_count(); ++v) {
        std::snprintf(buf, sizeof buf, "v %d %.17g %.17g\n", v, e.vertices[v].x,
                      e.vertices[v].y);
        out += buf;
    }
    for (int i = 0; i < e.edge_count(); ++i) {
        if (e.edge_tags[i].empty())
            std::snprintf(buf, sizeof buf, "e %d %d\n", e.edges[i].u, e.edges[i].v);
        else
            std::snprintf(buf, sizeof buf, "e %d %d %s\n", e.edges[i].u, e.edges[i].v,
                          e.edge_tags[i].c_str());
        out += buf;
    }
    return out;
}

Embedding read_embedding(std::string_view text) {
    Embedding e;
    std::vector<std::pair<Edge, std::string>> edges;
    int line_no = 0;
    std::size_t pos = 0;
    int next_vertex = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string> toks = split_tokens(line);
        if (toks.empty()) continue;

        if (toks[0] == "name") {
            std::string n;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (i > 1) n += ' ';
                n += toks[i];
            }
            e.name = n;
        } else if (toks[0] == "unit") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": malformed unit record");
        } else if (toks[0] == "v") {
            if (toks.size() != 4)
                throw ParseError("line " + std::to_string(line_no) + ": malformed vertex record");
            const int id = static_cast<int>(parse_real(toks[1], line_no));
            if (id != next_vertex)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": vertex ids must be dense from 0");
            ++next_vertex;
            e.vertices.push_back({parse_real(toks[2], line_no), parse_real(toks[3], line_no)});
        } else if (toks[0] == "e") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError("line " + std::to_string(line_no) + ": malformed edge record");
            const int u = static_cast<int>(parse_real(toks[1], line_no));
            const int v = static_cast<int>(parse_real(toks[2], line_no));
            edges.emplace_back(Edge{u, v}, toks.size() == 4 ? toks[3] : "");
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown record type '" +
                             toks[0] + "'");
        }
    }
    for (auto& [edge, tag] : edges) {
        if (edge.u < 0 || edge.v < 0 || edge.u >= e.vertex_count() ||
            edge.v >= e.vertex_count())
            throw ParseError("dangling edge reference " + std::to_string(edge.u) + "-" +
                             std::to_string(edge.v));
        if (edge.u == edge.v) throw ParseError("self-loop edge " + std::to_string(edge.u));
        edge = make_edge(edge.u, edge.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].first == edges[i + 1].first)
            throw ParseError("duplicate edge " + std::to_string(edges[i].first.u) + "-" +
                             std::to_string(edges[i].first.v));
    for (auto& [edge, tag] : edges) {
        e.edges.push_back(edge);
        e.edge_tags.push_back(std::move(tag));
    }
    if (e.vertex_count() < 2 || e.edge_count() < 1)
        throw ParseError("embedding needs at least 2 vertices and 1 edge");
    return e;
}

} // namespace msg
