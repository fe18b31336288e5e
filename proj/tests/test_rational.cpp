#include <doctest.h>

#include <stdexcept>

#include "normalmt/polynomial.hpp"
#include "normalmt/rational.hpp"

using nmt::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5, -1).den() == 1);
    CHECK(Rational(5, -1).num() == -5);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(9, 2) == Rational(1, 6));
    CHECK(Rational(7, 3) < Rational(5, 2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("overflow is detected, not wrapped") {
    const long long big = 5'000'000'000'000'000'000LL;
    CHECK_THROWS_AS(Rational(big) * Rational(big), std::overflow_error);
    CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
}

TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-2).str() == "-2");
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("polynomial interpolation and affine composition are exact") {
    using nmt::RationalPoly;
    // p(t) = t^2 - t/2 + 3 through three nodes
    const RationalPoly p = {Rational(3), Rational(-1, 2), Rational(1)};
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long k : {-1, 0, 2}) pts.emplace_back(Rational(k), nmt::poly_eval(p, Rational(k)));
    CHECK(nmt::poly_interpolate(pts) == p);

    // p(2t - 1) evaluated two ways
    const RationalPoly q = nmt::poly_compose_affine(p, Rational(2), Rational(-1));
    for (long long k = -3; k <= 3; ++k) {
        const Rational t(k, 2);
        CHECK(nmt::poly_eval(q, t) == nmt::poly_eval(p, Rational(2) * t - Rational(1)));
    }
}
