#include <doctest.h>

#include "normalmt/periodic.hpp"
#include "normalmt/scheme.hpp"

using nmt::PeriodicSequence;
using nmt::Point2;

TEST_CASE("periodic lookup winds with the stride") {
    PeriodicSequence<double> s;
    s.values = {0.0, 1.0, 3.0};
    s.stride = 10.0;
    CHECK(s.at(0) == 0.0);
    CHECK(s.at(2) == 3.0);
    CHECK(s.at(3) == 10.0);
    CHECK(s.at(5) == 13.0);
    CHECK(s.at(-1) == -7.0);
    CHECK(s.at(-3) == -10.0);
}

TEST_CASE("differences of a strided sequence close up periodically") {
    PeriodicSequence<double> s;
    s.values = {0.0, 1.0, 3.0};
    s.stride = 10.0;
    const auto d = nmt::diff(s);
    REQUIRE(d.values.size() == 3);
    CHECK(d.values[0] == 1.0);
    CHECK(d.values[1] == 2.0);
    CHECK(d.values[2] == 7.0);  // wraps to s_0 + stride
    CHECK(d.stride == 0.0);
    CHECK(d.at(4) == d.values[1]);
}

TEST_CASE("refinement doubles the period and keeps level and stride") {
    PeriodicSequence<double> s;
    s.values = {0.0, 1.0, 3.0, 4.0};
    s.stride = 8.0;
    s.level = 2;
    const auto fine = nmt::apply(nmt::lr_scheme(3), s);
    CHECK(fine.values.size() == 8);
    CHECK(fine.level == 3);
    CHECK(fine.stride == 8.0);
    // (S_3 s)_0 = (s_0 + s_1)/2, odd stencil (1/8, 6/8, 1/8)
    CHECK(fine.values[0] == doctest::Approx(0.5));
    CHECK(fine.values[1] == doctest::Approx((0.0 + 6.0 * 1.0 + 3.0) / 8.0));
    // Wrapping entries use s_4 = s_0 + stride, s_5 = s_1 + stride.
    CHECK(fine.values[7] == doctest::Approx((4.0 + 6.0 * 8.0 + 9.0) / 8.0));
}

TEST_CASE("duplication scheme duplicates") {
    PeriodicSequence<double> s;
    s.values = {2.0, -1.0, 5.0};
    const auto fine = nmt::apply(nmt::lr_scheme(0), s);
    CHECK(fine.values == std::vector<double>{2.0, 2.0, -1.0, -1.0, 5.0, 5.0});
}

TEST_CASE("constants are reproduced") {
    for (int p = 0; p <= 6; ++p) {
        PeriodicSequence<double> s;
        s.values.assign(8, 1.0);
        for (double v : nmt::apply(nmt::lr_scheme(p), s).values)
            CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("positive masks never expand the sup norm") {
    PeriodicSequence<double> s;
    s.values = {0.3, -0.8, 0.44, 0.9, -0.2, 0.05};
    for (int p = 1; p <= 7; ++p) {
        const auto fine = nmt::apply(nmt::lr_scheme(p), s);
        CHECK(nmt::inf_norm(fine.values) <= nmt::inf_norm(s.values) + 1e-15);
    }
}

TEST_CASE("a too-short period is rejected") {
    PeriodicSequence<double> s;
    s.values = {1.0, 2.0};
    CHECK_THROWS_AS(nmt::apply(nmt::lr_scheme(3), s), nmt::PeriodTooSmall);
}

TEST_CASE("point sequences refine componentwise") {
    PeriodicSequence<Point2> v;
    v.values = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const auto fine = nmt::apply(nmt::lr_scheme(3), v);
    CHECK(fine.values.size() == 8);
    CHECK(fine.values[0].x == doctest::Approx(0.5));
    CHECK(fine.values[0].y == doctest::Approx(0.5));
}
