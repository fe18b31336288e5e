#include <doctest.h>

#include <cmath>
#include <random>

#include "normalmt/curve.hpp"

using nmt::Circle;
using nmt::Ellipse;
using nmt::Point2;
using nmt::Ray;
using nmt::TrigCurve;

namespace {

// Non-convex closed test shape: a wavy circle.
TrigCurve wavy() {
    return TrigCurve({0.0, 1.0, 0.0, 0.25}, {0.0}, {0.0}, {0.0, 1.0, 0.0, 0.25});
}

}  // namespace

TEST_CASE("circle arc length is exact") {
    const Circle unit({0.0, 0.0}, 1.0);
    CHECK(unit.arclength(0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(unit.total_length() == doctest::Approx(2.0 * M_PI));

    const Circle two({0.0, 0.0}, 2.0);
    CHECK(two.arclength(M_PI) == doctest::Approx(2.0 * M_PI));
}

TEST_CASE("degenerate ellipse matches the circle") {
    const Circle unit({0.0, 0.0}, 1.0);
    const Ellipse e({0.0, 0.0}, 1.0, 1.0);
    for (double u : {0.3, 1.1, 2.9, 5.0})
        CHECK(e.arclength(u) == doctest::Approx(unit.arclength(u)).epsilon(1e-12));
    CHECK(e.total_length() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("arc length inverts to the parameter") {
    const Ellipse e({0.0, 0.0}, 2.0, 1.0);
    const TrigCurve t = wavy();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    for (int k = 0; k < 1000; ++k) {
        const double u = unif(rng);
        CHECK(e.param_of_arclength(e.arclength(u)) == doctest::Approx(u).epsilon(1e-10));
        CHECK(t.param_of_arclength(t.arclength(u)) == doctest::Approx(u).epsilon(1e-10));
    }
}

TEST_CASE("arc length lifts across periods") {
    const Ellipse e({0.0, 0.0}, 2.0, 1.0);
    const double L = e.total_length();
    CHECK(e.arclength(1.0 + 2.0 * M_PI) == doctest::Approx(e.arclength(1.0) + L));
    CHECK(e.param_of_arclength(0.5 + L) == doctest::Approx(e.param_of_arclength(0.5) + 2.0 * M_PI));
    CHECK(e.param_of_arclength(0.5 - L) == doctest::Approx(e.param_of_arclength(0.5) - 2.0 * M_PI));
}

TEST_CASE("frames on the unit circle") {
    const Circle unit({0.0, 0.0}, 1.0);
    {
        const auto [t, n] = nmt::frame_at(unit, 0.0);
        CHECK(t.x == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(t.y == doctest::Approx(1.0));
        CHECK(n.x == doctest::Approx(-1.0));
        CHECK(n.y == doctest::Approx(0.0).epsilon(1e-12));
    }
    {
        const auto [t, n] = nmt::frame_at(unit, M_PI / 2.0);
        CHECK(t.x == doctest::Approx(-1.0));
        CHECK(n.y == doctest::Approx(-1.0));
    }
}

TEST_CASE("frames are orthonormal and consistently oriented") {
    const TrigCurve t = wavy();
    const double L = t.total_length();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(0.0, L);
    for (int k = 0; k < 100; ++k) {
        const auto [tan, nor] = nmt::frame_at(t, unif(rng));
        CHECK(nmt::norm(tan) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(nmt::norm(nor) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(nmt::dot(tan, nor) == doctest::Approx(0.0).epsilon(1e-12));
    }
    // No flips along a fine sweep.
    Point2 prev = nmt::frame_at(t, 0.0).first;
    for (int k = 1; k <= 400; ++k) {
        const Point2 cur = nmt::frame_at(t, k * L / 400.0).first;
        CHECK(nmt::dot(prev, cur) > 0.0);
        prev = cur;
    }
}

TEST_CASE("frame differentiation recovers unit curvature") {
    const Circle unit({0.0, 0.0}, 1.0);
    const double h = 1e-5;
    for (double s : {0.25, 1.7, 4.4}) {
        const Point2 tp = nmt::frame_at(unit, s + h).first;
        const Point2 tm = nmt::frame_at(unit, s - h).first;
        const double kappa = nmt::norm((tp - tm) / (2.0 * h));
        CHECK(kappa == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("radial and center rays on the circle") {
    const Circle unit({0.0, 0.0}, 1.0);
    {
        const auto hits = nmt::intersect_ray(unit, Ray{{0.9, 0.0}, {1.0, 0.0}}, -0.5, 0.5);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].u == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(hits[0].t == doctest::Approx(0.1));
    }
    {
        const auto hits = nmt::intersect_ray(unit, Ray{{0.0, 0.0}, {1.0, 0.0}}, -0.5, 0.5);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].t == doctest::Approx(1.0));
    }
}

TEST_CASE("semi-axis ray on the ellipse") {
    const Ellipse e({0.0, 0.0}, 2.0, 1.0);
    const auto hits = nmt::intersect_ray(e, Ray{{0.0, 0.0}, {0.0, 1.0}}, M_PI / 2.0 - 0.7,
                                         M_PI / 2.0 + 0.7);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].u == doctest::Approx(M_PI / 2.0));
    CHECK(hits[0].t == doctest::Approx(1.0));
}

TEST_CASE("hits satisfy the ray equation") {
    const TrigCurve t = wavy();
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
        const double u0 = unif(rng);
        const Point2 at = t.eval(u0);
        const Point2 dir = nmt::normalized(nmt::perp(t.derivative(u0)));
        const Point2 origin = at - dir * 0.05;
        const auto hits = nmt::intersect_ray(t, Ray{origin, dir}, u0 - 0.4, u0 + 0.4);
        for (const auto& h : hits) {
            const Point2 gap = origin + dir * h.t - t.eval(h.u);
            CHECK(nmt::norm(gap) <= 1e-10);
            ++checked;
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("a line that misses the bracket arc throws") {
    const Circle unit({0.0, 0.0}, 1.0);
    CHECK_THROWS_AS(nmt::intersect_ray(unit, Ray{{2.0, 0.0}, {0.0, 1.0}}, -1.0, 1.0),
                    nmt::NoIntersection);
}

TEST_CASE("quadratic sample sizes and anchors") {
    const Circle unit({0.0, 0.0}, 1.0);
    {
        const auto sample = nmt::initial_sample_quadratic(unit, 0.01);
        CHECK(sample.points.values.size() == 100);
        CHECK(sample.arclengths.values[0] == 0.0);
        CHECK(sample.points.values[0].x == doctest::Approx(1.0));
        CHECK(sample.points.values[0].y == doctest::Approx(0.0));
        CHECK(sample.arclengths.stride == doctest::Approx(2.0 * M_PI));
    }
    {
        const auto sample = nmt::initial_sample_quadratic(unit, 0.1);
        CHECK(sample.points.values.size() == 10);
        CHECK(sample.arclengths.values[3] == doctest::Approx(M_PI * (0.3 + 0.09)));
    }
    CHECK_THROWS_AS(nmt::initial_sample_quadratic(unit, 0.3), nmt::ConfigError);
}

TEST_CASE("uniform samples are counterclockwise n-gons") {
    const Circle unit({0.0, 0.0}, 1.0);
    const auto sample = nmt::initial_sample_uniform(unit, 12);
    CHECK(sample.points.values.size() == 12);
    for (int i = 0; i < 12; ++i)
        CHECK(sample.arclengths.values[static_cast<size_t>(i)] ==
              doctest::Approx(i * M_PI / 6.0));
}

TEST_CASE("bad explicit arc lengths are rejected") {
    const Circle unit({0.0, 0.0}, 1.0);
    CHECK_THROWS_AS(nmt::initial_sample_arclengths(unit, {0.0, 2.0, 1.0, 3.0}),
                    nmt::NotMonotone);
    CHECK_THROWS_AS(nmt::initial_sample_arclengths(unit, {0.0, 1.0, 9.0}), nmt::NotMonotone);
}
