#include "msg/motifs.hpp"

#include "msg/errors.hpp"
#include "point_grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace msg {

std::vector<int> MotifMatch::host_vertices() const {
    std::vector<int> v = vertex_map;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Edge> MotifMatch::host_edges(const Pattern& p) const {
    std::vector<Edge> out;
    out.reserve(p.embedding.edge_count());
    for (const Edge& pe : p.embedding.edges)
        out.push_back(make_edge(vertex_map[pe.u], vertex_map[pe.v]));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct SeedFrame {
    Point origin;
    Point dir; // unit vector along the seed edge
};

// Rigid motion taking the pattern's seed frame onto a host frame, with an
// optional reflection folded in.
struct Placement {
    Point t;
    double m00, m01, m10, m11;

    Point apply(Point p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
};

Placement align(const SeedFrame& from, Point host_a, Point host_dir, bool reflect) {
    // Optionally mirror the pattern across its seed line, then rotate the
    // seed direction onto the host direction.
    const double fc = from.dir.x, fs = from.dir.y;
    const double hc = host_dir.x, hs = host_dir.y;
    // rotation by (host angle - pattern angle)
    const double c = fc * hc + fs * hs;
    const double s = fc * hs - fs * hc;
    Placement pl{};
    if (!reflect) {
        pl.m00 = c;
        pl.m01 = -s;
        pl.m10 = s;
        pl.m11 = c;
    } else {
        // reflect across the pattern seed line first
        const double rc = fc * fc - fs * fs;
        const double rs = 2.0 * fc * fs;
        pl.m00 = c * rc - s * rs;
        pl.m01 = c * rs + s * rc;
        pl.m10 = s * rc + c * rs;
        pl.m11 = s * rs - c * rc;
    }
    pl.t = {host_a.x - (pl.m00 * from.origin.x + pl.m01 * from.origin.y),
            host_a.y - (pl.m10 * from.origin.x + pl.m11 * from.origin.y)};
    return pl;
}

SeedFrame seed_frame(const Pattern& p) {
    const Edge seed = p.embedding.edges.front();
    const Point a = p.embedding.vertices[seed.u];
    const Point b = p.embedding.vertices[seed.v];
    const double len = distance(a, b);
    if (len < 1e-12) throw InputError("find_motifs: degenerate pattern seed edge");
    return {a, (1.0 / len) * (b - a)};
}

} // namespace

std::vector<MotifMatch> find_motifs(const Embedding& host, const Pattern& p,
                                    const TolerancePolicy& tol) {
    const int pv = p.embedding.vertex_count();
    if (pv > host.vertex_count()) return {};

    const SeedFrame frame = seed_frame(p);
    detail::PointGrid grid(host.vertices, tol.snap_tol);

    std::map<std::vector<int>, MotifMatch> dedup; // key: sorted host vertex set
    for (const Edge& he : host.edges) {
        for (const auto& [sa, sb] : {std::pair{he.u, he.v}, std::pair{he.v, he.u}}) {
            const Point ha = host.vertices[sa];
            const Point hb = host.vertices[sb];
            const double hl = distance(ha, hb);
            if (hl < 1e-12) continue;
            const Point hdir = (1.0 / hl) * (hb - ha);
            for (bool reflect : {false, true}) {
                const Placement pl = align(frame, ha, hdir, reflect);
                std::vector<int> vmap(pv, -1);
                std::vector<char> used(host.vertex_count(), 0);
                double err2 = 0.0;
                bool ok = true;
                for (int k = 0; k < pv; ++k) {
                    const Point q = pl.apply(p.embedding.vertices[k]);
                    const int j = grid.nearest_within(q, tol.snap_tol);
                    if (j < 0 || used[j]) {
                        ok = false;
                        break;
                    }
                    vmap[k] = j;
                    used[j] = 1;
                    const double d = distance(q, host.vertices[j]);
                    err2 += d * d;
                }
                if (!ok) continue;
                for (const Edge& pe : p.embedding.edges) {
                    if (!host.has_edge(vmap[pe.u], vmap[pe.v])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;

                MotifMatch match;
                match.pattern = p.name;
                match.vertex_map = vmap;
                match.reflected = reflect;
                match.rms_error = std::sqrt(err2 / pv);
                std::vector<int> key = match.host_vertices();
                auto it = dedup.find(key);
                if (it == dedup.end())
                    dedup.emplace(std::move(key), std::move(match));
                else if (match.rms_error < it->second.rms_error)
                    it->second = std::move(match);
            }
        }
    }

    std::vector<MotifMatch> out;
    out.reserve(dedup.size());
    for (auto& [key, match] : dedup) out.push_back(std::move(match));
    return out; // map order: sorted by host vertex set, smallest id first
}

std::vector<NearMatch> find_near_motifs(const Embedding& host, const Pattern& p,
                                        const TolerancePolicy& tol) {
    constexpr int max_missing = 2;
    const int pv = p.embedding.vertex_count();
    const SeedFrame frame = seed_frame(p);
    detail::PointGrid grid(host.vertices, tol.snap_tol);

    std::set<std::vector<int>> full_sets;
    for (const MotifMatch& m : find_motifs(host, p, tol)) full_sets.insert(m.host_vertices());

    std::set<std::vector<int>> near_sets;
    std::vector<NearMatch> out;
    for (const Edge& he : host.edges) {
        for (const auto& [sa, sb] : {std::pair{he.u, he.v}, std::pair{he.v, he.u}}) {
            const Point ha = host.vertices[sa];
            const Point hb = host.vertices[sb];
            const double hl = distance(ha, hb);
            if (hl < 1e-12) continue;
            const Point hdir = (1.0 / hl) * (hb - ha);
            for (bool reflect : {false, true}) {
                const Placement pl = align(frame, ha, hdir, reflect);
                std::vector<int> vmap(pv, -1);
                std::vector<char> used(host.vertex_count(), 0);
                int missing = 0;
                for (int k = 0; k < pv && missing <= max_missing; ++k) {
                    const Point q = pl.apply(p.embedding.vertices[k]);
                    const int j = grid.nearest_within(q, tol.snap_tol);
                    if (j < 0 || used[j]) {
                        ++missing;
                        continue;
                    }
                    vmap[k] = j;
                    used[j] = 1;
                }
                if (missing == 0 || missing > max_missing) continue;
                bool ok = true;
                for (const Edge& pe : p.embedding.edges) {
                    if (vmap[pe.u] < 0 || vmap[pe.v] < 0) continue;
                    if (!host.has_edge(vmap[pe.u], vmap[pe.v])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::vector<int> key;
                for (int j : vmap)
                    if (j >= 0) key.push_back(j);
                std::sort(key.begin(), key.end());
                // skip placements inside a full match
                bool subset_of_full = false;
                for (const std::vector<int>& fs : full_sets) {
                    if (std::includes(fs.begin(), fs.end(), key.begin(), key.end())) {
                        subset_of_full = true;
                        break;
                    }
                }
                if (subset_of_full || !near_sets.insert(key).second) continue;
                out.push_back({p.name, key, missing});
            }
        }
    }
    return out;
}

MotifInventory motif_inventory(const Embedding& host, const std::vector<Pattern>& patterns,
                               const TolerancePolicy& tol) {
    MotifInventory inv;
    std::set<Edge> covered;
    for (const Pattern& p : patterns) {
        const std::vector<MotifMatch> matches = find_motifs(host, p, tol);
        PatternCount pc;
        pc.pattern = p.name;
        pc.matches = static_cast<int>(matches.size());

        std::set<Edge> taken;
        for (const MotifMatch& m : matches) {
            const std::vector<Edge> edges = m.host_edges(p);
            const bool disjoint = std::none_of(edges.begin(), edges.end(),
                                               [&](const Edge& e) { return taken.count(e); });
            if (disjoint) {
                ++pc.disjoint;
                taken.insert(edges.begin(), edges.end());
            }
            covered.insert(edges.begin(), edges.end());
        }
        pc.near_matches = static_cast<int>(find_near_motifs(host, p, tol).size());
        inv.counts.push_back(pc);
    }
    inv.edge_coverage =
        host.edge_count() ? static_cast<double>(covered.size()) / host.edge_count() : 0.0;
    return inv;
}

} // namespace msg
