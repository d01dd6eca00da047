#include "msg/verify.hpp"

#include "msg/catalog.hpp"
#include "msg/refine.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace msg;

TEST_CASE("unit length check") {
    const UnitCheck tri = check_unit_lengths(test::unit_triangle(), 1e-9);
    CHECK(tri.ok);
    CHECK(tri.max_abs_deviation == 0.0);

    // unit square with one diagonal: the diagonal misses by sqrt(2) - 1
    Embedding sq = test::unit_square_cycle();
    sq.edges.push_back(make_edge(0, 2));
    sq.edge_tags.push_back("");
    std::sort(sq.edges.begin(), sq.edges.end());
    const UnitCheck uc = check_unit_lengths(sq, 1e-9);
    CHECK_FALSE(uc.ok);
    CHECK(uc.max_abs_deviation == doctest::Approx(std::sqrt(2.0) - 1.0));
}

TEST_CASE("noncrossing: crossings, touching, clean graphs") {
    Embedding crossing;
    crossing.vertices = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    crossing.edges = {{0, 1}, {2, 3}};
    crossing.edge_tags = {"", ""};
    const NoncrossingCheck bad = check_noncrossing(crossing, {});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].edge_a == 0);
    CHECK(bad.violations[0].edge_b == 1);

    const NoncrossingCheck good = check_noncrossing(test::unit_triangle(), {});
    CHECK(good.ok);
    CHECK(good.violations.empty());
    CHECK(good.near_contacts.empty());
}

TEST_CASE("noncrossing: collinear overlap at a shared vertex is a violation") {
    Embedding e;
    e.vertices = {{0, 0}, {1, 0}, {0.5, 0}}; // two sticks along the same ray
    e.edges = {{0, 1}, {0, 2}};
    e.edge_tags = {"", ""};
    const NoncrossingCheck nc = check_noncrossing(e, {});
    CHECK_FALSE(nc.ok);
    CHECK(nc.violations.size() == 1);

    // a near-zero angle below a widened angle tolerance is also flagged
    Embedding narrow;
    narrow.vertices = {{0, 0}, {1, 0}, {0.9999, 0.0001}};
    narrow.edges = {{0, 1}, {0, 2}};
    narrow.edge_tags = {"", ""};
    CHECK(check_noncrossing(narrow, {}).ok); // above the default tolerance
    TolerancePolicy wide;
    wide.angle_tol = 0.1; // degrees
    CHECK_FALSE(check_noncrossing(narrow, wide).ok);

    // two collinear unit edges meeting end to end are fine (angle 180)
    Embedding chain;
    chain.vertices = {{0, 0}, {1, 0}, {2, 0}};
    chain.edges = {{0, 1}, {1, 2}};
    chain.edge_tags = {"", ""};
    CHECK(check_noncrossing(chain, {}).ok);
}

TEST_CASE("near contacts are reported between warn and fail thresholds") {
    Embedding e;
    e.vertices = {{0, 0}, {1, 0}, {0, 1e-4}, {1, 1e-4}};
    e.edges = {{0, 1}, {2, 3}};
    e.edge_tags = {"", ""};
    const NoncrossingCheck nc = check_noncrossing(e, {});
    CHECK(nc.ok);
    REQUIRE(nc.near_contacts.size() == 1);
    CHECK(nc.near_contacts[0].separation == doctest::Approx(1e-4));
}

TEST_CASE("the fig13 near-contact region shows up with a wider warn threshold") {
    const Embedding raw = build_embedding(load_entry_segments(*find_entry("fig13")));
    const RefineResult r = refine(raw);
    REQUIRE(r.converged);

    const NoncrossingCheck defaults = check_noncrossing(r.embedding, {});
    CHECK(defaults.ok); // no violations at the default thresholds

    TolerancePolicy wide;
    wide.sep_warn = 5e-3;
    const NoncrossingCheck widened = check_noncrossing(r.embedding, wide);
    CHECK(widened.ok);
    CHECK(widened.near_contacts.size() >= 1);
}

TEST_CASE("verify_matchstick aggregates") {
    const VerificationReport tri = verify_matchstick(test::unit_triangle(), 2, 2);
    CHECK(tri.pass);

    const Embedding kite_raw = build_embedding(load_entry_segments(*find_entry("fig1a")));
    const RefineResult kite = refine(kite_raw);
    REQUIRE(kite.converged);
    const VerificationReport as44 = verify_matchstick(kite.embedding, 4, 4);
    CHECK_FALSE(as44.pass); // degree-2 vertices exist
    CHECK_FALSE(as44.profile.ok);
    const VerificationReport as24 = verify_matchstick(kite.embedding, 2, 4);
    CHECK(as24.pass);
    CHECK(as24.profile.profile.count_m == 3);
}

TEST_CASE("verification is invariant under rigid motion and re-indexing") {
    const Embedding raw = build_embedding(load_entry_segments(*find_entry("fig1a")));
    const RefineResult r = refine(raw);
    REQUIRE(r.converged);
    const VerificationReport base = verify_matchstick(r.embedding, 2, 4);

    const Embedding moved = test::apply_rigid_motion(r.embedding, 1.234, {5, -3});
    const VerificationReport mv = verify_matchstick(moved, 2, 4);
    CHECK(mv.pass == base.pass);
    CHECK(mv.unit.max_abs_deviation ==
          doctest::Approx(base.unit.max_abs_deviation).epsilon(1e-10).scale(1.0));
    CHECK(mv.noncrossing.violations.size() == base.noncrossing.violations.size());
    CHECK(mv.profile.profile.count_m == base.profile.profile.count_m);

    // reverse the vertex order
    Embedding relabeled = r.embedding;
    const int n = relabeled.vertex_count();
    std::reverse(relabeled.vertices.begin(), relabeled.vertices.end());
    for (Edge& e : relabeled.edges) e = make_edge(n - 1 - e.u, n - 1 - e.v);
    std::sort(relabeled.edges.begin(), relabeled.edges.end());
    const VerificationReport rl = verify_matchstick(relabeled, 2, 4);
    CHECK(rl.pass == base.pass);
    CHECK(rl.unit.max_abs_deviation ==
          doctest::Approx(base.unit.max_abs_deviation).epsilon(1e-12).scale(1.0));
}

TEST_CASE("disconnected input fails verification") {
    Embedding two;
    two.vertices = {{0, 0}, {1, 0}, {5, 5}, {6, 5}};
    two.edges = {{0, 1}, {2, 3}};
    two.edge_tags = {"", ""};
    const VerificationReport rep = verify_matchstick(two, 1, 1);
    CHECK_FALSE(rep.connected);
    CHECK_FALSE(rep.pass);
}
