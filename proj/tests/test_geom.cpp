#include "msg/geom.hpp"

#include "msg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace msg;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {0, 0}) == 0.0);
    CHECK(distance({0, 0}, {1, 0}) == 1.0);
    // first stroke of the fig1a listing, raw figure units
    CHECK(distance({86.5346, 1050.0456}, {128.7085, 1038.3319}) ==
          doctest::Approx(43.77).epsilon(1e-3));
}

TEST_CASE("segment separation: shared endpoint, offset, crossing") {
    CHECK(segment_separation({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}) == 0.0);
    CHECK(segment_separation({{0, 0}, {1, 0}}, {{0, 0.5}, {1, 0.5}}) == doctest::Approx(0.5));
    CHECK(segment_separation({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}) == 0.0);
}

TEST_CASE("segment separation agrees with dense sampling") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Segment s{{c(rng), c(rng)}, {c(rng), c(rng)}};
        const Segment t{{c(rng), c(rng)}, {c(rng), c(rng)}};
        const double got = segment_separation(s, t);
        // sampling can only miss the closest pair, so it upper-bounds the
        // true separation by at most one sample spacing
        const double ref = test::sampled_segment_separation(s, t);
        const double spacing =
            std::max(distance(s.a, s.b), distance(t.a, t.b)) / 2000.0;
        CHECK(got <= ref + 1e-12);
        CHECK(got >= ref - 2.0 * spacing);
        CHECK(got == doctest::Approx(segment_separation(t, s)));
    }
}

TEST_CASE("separation and distance are invariant under rigid motions") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> c(-2.0, 2.0), ang(0.0, 6.28);
    for (int i = 0; i < 100; ++i) {
        const Point p{c(rng), c(rng)}, q{c(rng), c(rng)};
        const Segment s{{c(rng), c(rng)}, {c(rng), c(rng)}};
        const Segment t{{c(rng), c(rng)}, {c(rng), c(rng)}};
        const double th = ang(rng);
        const Point shift{c(rng), c(rng)};
        auto move = [&](Point v) -> Point {
            return {std::cos(th) * v.x - std::sin(th) * v.y + shift.x,
                    std::sin(th) * v.x + std::cos(th) * v.y + shift.y};
        };
        CHECK(distance(move(p), move(q)) == doctest::Approx(distance(p, q)).epsilon(1e-12));
        const Segment s2{move(s.a), move(s.b)}, t2{move(t.a), move(t.b)};
        CHECK(segment_separation(s2, t2) ==
              doctest::Approx(segment_separation(s, t)).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("point-segment distance") {
    auto [d1, t1] = point_segment_distance({0.5, 0}, {{0, 0}, {1, 0}});
    CHECK(d1 == 0.0);
    CHECK(t1 == doctest::Approx(0.5));
    auto [d2, t2] = point_segment_distance({0.5, 1}, {{0, 0}, {1, 0}});
    CHECK(d2 == doctest::Approx(1.0));
    CHECK(t2 == doctest::Approx(0.5));
    // midpoint of a two-unit stroke of fig1a lands on a listed vertex
    auto [d3, t3] =
        point_segment_distance({75.5920, 1007.6651}, {{64.6494, 965.2847}, {86.5346, 1050.0456}});
    CHECK(d3 <= 1e-3);
    CHECK(t3 == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("direction angle convention and antisymmetry") {
    CHECK(direction_angle({0, 0}, {1, 0}) == doctest::Approx(0.0));
    CHECK(direction_angle({0, 0}, {0, 1}) == doctest::Approx(90.0));
    CHECK(direction_angle({0, 0}, {-1, 0}) == doctest::Approx(180.0));
    CHECK_THROWS_AS(direction_angle({1, 1}, {1, 1}), InputError);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Point p{c(rng), c(rng)}, q{c(rng), c(rng)};
        if (p.x == q.x && p.y == q.y) continue;
        const double a = direction_angle(p, q);
        const double b = direction_angle(q, p);
        CHECK(std::fmod(std::abs(a - b), 360.0) == doctest::Approx(180.0).epsilon(1e-12));
        CHECK(a >= 0.0);
        CHECK(a < 360.0);
    }
}
