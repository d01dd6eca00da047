#include "msg/refine.hpp"

#include "msg/catalog.hpp"
#include "msg/errors.hpp"
#include "msg/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace msg;

TEST_CASE("residual") {
    CHECK(residual(test::unit_triangle()) == 0.0);
    Embedding e;
    e.vertices = {{0, 0}, {1.5, 0}};
    e.edges = {{0, 1}};
    e.edge_tags = {""};
    CHECK(residual(e) == doctest::Approx(0.5));

    const Embedding fig4 = build_embedding(load_entry_segments(*find_entry("fig4")));
    const double r = residual(fig4);
    CHECK(r > 1e-7);
    CHECK(r < 1e-3);
}

TEST_CASE("exact input needs no iterations") {
    const RefineResult r = refine(test::unit_triangle());
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.displacement == 0.0);
}

TEST_CASE("refine the raw kite") {
    const Embedding raw = build_embedding(load_entry_segments(*find_entry("fig1a")));
    const RefineResult r = refine(raw);
    CHECK(r.converged);
    CHECK(r.final_residual <= 1e-9);
    CHECK(r.displacement <= 1e-3);
    CHECK(r.embedding.edges == raw.edges);
    CHECK(r.embedding.edge_tags == raw.edge_tags);
}

TEST_CASE("flexible framework converges via minimum-norm steps") {
    Embedding sq = test::unit_square_cycle();
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
    for (Point& p : sq.vertices) {
        p.x += jitter(rng);
        p.y += jitter(rng);
    }
    const RefineResult r = refine(sq);
    CHECK(r.converged);
    CHECK(r.final_residual <= 1e-9);
}

TEST_CASE("precondition: far-from-unit input is rejected") {
    Embedding e;
    e.vertices = {{0, 0}, {1.5, 0}};
    e.edges = {{0, 1}};
    e.edge_tags = {""};
    CHECK_THROWS_AS(refine(e), InputError);
}

TEST_CASE("idempotence") {
    const Embedding raw = build_embedding(load_entry_segments(*find_entry("fig1c")));
    const RefineResult first = refine(raw);
    REQUIRE(first.converged);
    const RefineResult second = refine(first.embedding);
    CHECK(second.converged);
    CHECK(second.displacement <= 1e-12);
}

TEST_CASE("equivariance under rigid motions of the input") {
    const Embedding raw = build_embedding(load_entry_segments(*find_entry("fig1a")));
    const RefineResult base = refine(raw);
    const double th = 0.7;
    const Point shift{2.5, -1.0};
    const Embedding moved_input = test::apply_rigid_motion(raw, th, shift);
    const RefineResult moved = refine(moved_input);
    REQUIRE(base.converged);
    REQUIRE(moved.converged);
    const Embedding expected = test::apply_rigid_motion(base.embedding, th, shift);
    for (int v = 0; v < raw.vertex_count(); ++v)
        CHECK(distance(expected.vertices[v], moved.embedding.vertices[v]) <= 1e-10);
}

TEST_CASE("analytic Jacobian matches central finite differences") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Embedding e = test::random_framework(rng, 5, 3);
        const Eigen::MatrixXd jac = squared_length_jacobian(e);
        const double h = 1e-6;
        for (int v = 0; v < e.vertex_count(); ++v) {
            for (int c = 0; c < 2; ++c) {
                Embedding plus = e, minus = e;
                (c == 0 ? plus.vertices[v].x : plus.vertices[v].y) += h;
                (c == 0 ? minus.vertices[v].x : minus.vertices[v].y) -= h;
                const Eigen::VectorXd fd =
                    (squared_length_residuals(plus) - squared_length_residuals(minus)) /
                    (2.0 * h);
                for (int row = 0; row < jac.rows(); ++row) {
                    const double a = jac(row, 2 * v + c);
                    const double b = fd(row);
                    CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(a)));
                }
            }
        }
    }
}

TEST_CASE("refinement never creates crossings on the bundled graphs") {
    for (const char* id : {"fig1a", "fig2a", "fig13"}) {
        const Embedding raw = build_embedding(load_entry_segments(*find_entry(id)));
        const RefineResult r = refine(raw);
        REQUIRE(r.converged);
        const NoncrossingCheck nc = check_noncrossing(r.embedding, {});
        CHECK(nc.ok);
    }
}
