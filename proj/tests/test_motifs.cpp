#include "msg/motifs.hpp"

#include "msg/catalog.hpp"
#include "msg/refine.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace msg;

namespace {

const std::vector<Pattern>& patterns() {
    static const std::vector<Pattern> p = load_patterns();
    return p;
}

const Pattern& pattern(const std::string& name) {
    for (const Pattern& p : patterns())
        if (p.name == name) return p;
    REQUIRE(false);
    return patterns().front();
}

Embedding refined(const char* id) {
    const RefineResult r = refine(build_embedding(load_entry_segments(*find_entry(id))));
    REQUIRE(r.converged);
    return r.embedding;
}

} // namespace

TEST_CASE("every pattern matches itself exactly once") {
    for (const Pattern& p : patterns()) {
        const auto matches = find_motifs(p.embedding, p);
        CHECK(matches.size() == 1);
        CHECK(matches[0].rms_error <= 1e-3);
        CHECK(p.automorphism_count == 2); // each block has a single nontrivial isometry
    }
}

TEST_CASE("no motifs in a triangle") {
    for (const Pattern& p : patterns())
        CHECK(find_motifs(test::unit_triangle(), p).empty());
}

TEST_CASE("kites in fig2a") {
    const Embedding host = refined("fig2a");
    const auto matches = find_motifs(host, pattern("kite"));
    CHECK(matches.size() == 6);
    for (const MotifMatch& m : matches) {
        CHECK(m.rms_error <= 1e-3);
        // vertex map is injective
        std::vector<int> verts = m.host_vertices();
        CHECK(std::adjacent_find(verts.begin(), verts.end()) == verts.end());
    }
}

TEST_CASE("double kite contains one double-kite placement and two kites") {
    const Embedding host = refined("fig1c");
    CHECK(find_motifs(host, pattern("double-kite")).size() == 1);
    CHECK(find_motifs(host, pattern("kite")).size() == 2);
}

TEST_CASE("matches realign under best-fit Procrustes within snap tolerance") {
    const Embedding host = refined("fig9");
    for (const char* name : {"kite", "double-kite"}) {
        const Pattern& p = pattern(name);
        const auto matches = find_motifs(host, p);
        CHECK_FALSE(matches.empty());
        for (const MotifMatch& m : matches) {
            std::vector<Point> from, to;
            for (int k = 0; k < p.embedding.vertex_count(); ++k) {
                from.push_back(p.embedding.vertices[k]);
                to.push_back(host.vertices[m.vertex_map[k]]);
            }
            CHECK(test::procrustes_rms(from, to, m.reflected) <= 1e-3);
        }
    }
}

TEST_CASE("match counts are invariant under host motion, reflection, re-indexing") {
    const Embedding host = refined("fig1c");
    const Pattern& kite = pattern("kite");
    const std::size_t base = find_motifs(host, kite).size();

    CHECK(find_motifs(test::apply_rigid_motion(host, 1.3, {4, 2}), kite).size() == base);
    CHECK(find_motifs(test::apply_rigid_motion(host, 0.4, {-1, 0}, true), kite).size() ==
          base);

    Embedding relabeled = host;
    const int n = relabeled.vertex_count();
    std::reverse(relabeled.vertices.begin(), relabeled.vertices.end());
    for (Edge& e : relabeled.edges) e = make_edge(n - 1 - e.u, n - 1 - e.v);
    std::sort(relabeled.edges.begin(), relabeled.edges.end());
    relabeled.edge_tags.assign(relabeled.edges.size(), "");
    CHECK(find_motifs(relabeled, kite).size() == base);
}

TEST_CASE("inventory of fig9: overlapping double-kites collapse to two disjoint ones") {
    const Embedding host = refined("fig9");
    const MotifInventory inv = motif_inventory(host, patterns());
    int kite_matches = 0, dk_matches = 0, dk_disjoint = 0, kite_near = 0;
    for (const PatternCount& pc : inv.counts) {
        if (pc.pattern == "kite") {
            kite_matches = pc.matches;
            kite_near = pc.near_matches;
        }
        if (pc.pattern == "double-kite") {
            dk_matches = pc.matches;
            dk_disjoint = pc.disjoint;
        }
    }
    CHECK(kite_matches == 6);
    CHECK(dk_matches == 3); // three placements, two of them overlapping
    CHECK(dk_disjoint == 2);
    CHECK(kite_near == 2); // the two slightly modified kites
    CHECK(inv.edge_coverage > 0.5);
}

TEST_CASE("inventory of fig5 and fig2a") {
    const MotifInventory f5 = motif_inventory(refined("fig5"), patterns());
    for (const PatternCount& pc : f5.counts)
        if (pc.pattern == "triplet-kite") {
            CHECK(pc.matches == 2);
            CHECK(pc.disjoint == 2);
        }

    const MotifInventory f2a = motif_inventory(refined("fig2a"), patterns());
    for (const PatternCount& pc : f2a.counts)
        if (pc.pattern == "kite") {
            CHECK(pc.matches == 6);
            CHECK(pc.disjoint == 6);
        }
    CHECK(f2a.edge_coverage == doctest::Approx(1.0)); // six disjoint kites cover it all
}
