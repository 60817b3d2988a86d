#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "grovercorr/error.hpp"
#include "grovercorr/grover_core.hpp"

using namespace grovercorr;

TEST_CASE("config validation") {
    CHECK_NOTHROW(GroverConfig(1));
    CHECK_NOTHROW(GroverConfig(62));
    CHECK_THROWS_AS(GroverConfig(0), Error);
    CHECK_THROWS_AS(GroverConfig(63), Error);
    CHECK_THROWS_AS(GroverConfig(3, 0), Error);
    CHECK_THROWS_AS(GroverConfig(3, 8), Error);
    CHECK_THROWS_AS(GroverConfig(3, 1, 8), Error);
    try {
        GroverConfig(2, 4);
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidConfig);
    }
}

TEST_CASE("closest_integer") {
    CHECK(closest_integer(1.054) == 1);
    CHECK(closest_integer(0.49) == 0);
    CHECK(closest_integer(17.5) == 18);
    CHECK(closest_integer(-2.5) == -3);
    CHECK_THROWS_AS(closest_integer(std::numeric_limits<double>::quiet_NaN()), Error);
    CHECK_THROWS_AS(closest_integer(std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(closest_integer(1e300), Error);
}

TEST_CASE("angle") {
    CHECK(angle(GroverConfig(2)) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-15));
    CHECK(angle(GroverConfig(4, 8)) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    // 2 asin(2^(-11/2)) in 30-digit arithmetic
    CHECK(angle(GroverConfig(11)) == doctest::Approx(0.04419777114571532).epsilon(1e-14));
    CHECK(angle(GroverConfig(4)) == doctest::Approx(0.5053605102841573).epsilon(1e-14));
    // the arccos form loses everything at large N; the asin form does not
    const double n60 = angle(GroverConfig(60));
    CHECK(n60 == doctest::Approx(2.0 * std::pow(2.0, -30)).epsilon(1e-12));
}

TEST_CASE("iteration_point") {
    for (int n : {1, 3, 7, 11}) {
        const GroverConfig c(n);
        const auto p = iteration_point(c, 0);
        const double u = 1.0 / std::sqrt(static_cast<double>(c.dim()));
        CHECK(p.a == doctest::Approx(u).epsilon(1e-14));
        CHECK(p.b == doctest::Approx(u).epsilon(1e-14));
        CHECK(p.probability == doctest::Approx(u * u).epsilon(1e-14));
    }
    const auto two = iteration_point(GroverConfig(2), 1);
    CHECK(two.a == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(two.b) < 1e-15);
    CHECK(two.probability == doctest::Approx(1.0).epsilon(1e-15));

    const auto four = iteration_point(GroverConfig(4), 1);
    CHECK(four.a == doctest::Approx(11.0 / 16).epsilon(1e-14));
    CHECK(four.b == doctest::Approx(3.0 / 16).epsilon(1e-14));

    const auto p = iteration_point(GroverConfig(11), 17);
    CHECK(p.a == doctest::Approx(0.6986157496215773).epsilon(1e-13));
    CHECK(p.b == doctest::Approx(0.01581426196430496).epsilon(1e-12));
    CHECK(p.probability == doctest::Approx(0.4880639656193184).epsilon(1e-13));

    CHECK_THROWS_AS(iteration_point(GroverConfig(3), -1), Error);
}

TEST_CASE("rate is the derivative of the success probability") {
    const GroverConfig c(9);
    const double alpha = angle(c);
    for (double r : {0.0, 3.0, 8.0, 15.0}) {
        const double h = 1e-5;
        auto prob = [&](double x) { return std::pow(std::sin((2 * x + 1) * alpha / 2), 2); };
        const double numeric = (prob(r + h) - prob(r - h)) / (2 * h);
        CHECK(iteration_point(c, static_cast<std::int64_t>(r)).rate == doctest::Approx(numeric).epsilon(1e-6));
    }
}

TEST_CASE("amplitudes stay normalized for several marked states") {
    const GroverConfig c(6, 5);
    for (std::int64_t r = 0; r < 20; ++r) {
        const auto p = iteration_point(c, r);
        const double norm = p.a * p.a + static_cast<double>(c.dim() - c.marked()) * p.b * p.b;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("optimal and peak iterations") {
    CHECK(optimal_iterations(GroverConfig(2)) == 1);
    CHECK(optimal_iterations(GroverConfig(4)) == 3);
    CHECK(optimal_iterations(GroverConfig(11)) == 35);
    CHECK(peak_iterations(GroverConfig(4)) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(peak_iterations(GroverConfig(11)).first == 17);
    CHECK(peak_iterations(GroverConfig(11)).second == 17);
    for (int n = 2; n <= 62; ++n) {
        const auto [r1, r2] = peak_iterations(GroverConfig(n));
        CHECK(r1 - r2 >= 0);
        CHECK(r1 - r2 <= 1);
    }
    CHECK_THROWS_AS(peak_iterations(GroverConfig(5, 3)), Error);
}

TEST_CASE("angles bundle") {
    const auto a = angles(GroverConfig(11));
    CHECK(a.alpha == angle(GroverConfig(11)));
    CHECK(a.theta0 == doctest::Approx(std::numbers::pi / 2 - a.alpha / 2));
    CHECK(a.optimal == 35);
    CHECK(a.rate_peak == 17);
    CHECK(a.concurrence_peak == 17);
    const auto multi = angles(GroverConfig(5, 2));
    CHECK(multi.rate_peak == -1);
    CHECK(multi.concurrence_peak == -1);
}
