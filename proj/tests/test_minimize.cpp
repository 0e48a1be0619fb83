#include <cmath>
#include <numbers>

#include "doctest.h"
#include "slitwave/minimize.hpp"

using namespace slitwave;

TEST_CASE("brent finds the minimum of a shifted parabola") {
    const auto f = [](double x) { return (x - std::numbers::pi) * (x - std::numbers::pi); };
    const MinResult r = brent_minimize(f, 0.0, 10.0, 1e-10);
    CHECK(std::abs(r.x - std::numbers::pi) < 1e-9);
    CHECK(r.value < 1e-18);
}

TEST_CASE("brent on cos locates pi") {
    const MinResult r = brent_minimize([](double x) { return std::cos(x); }, 2.0, 4.0, 1e-10);
    CHECK(std::abs(r.x - std::numbers::pi) < 1e-8);
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("brent handles a non-smooth kink") {
    const MinResult r = brent_minimize([](double x) { return std::abs(x - 0.7); }, 0.0, 2.0, 1e-10);
    CHECK(std::abs(r.x - 0.7) < 1e-8);
}

TEST_CASE("brent is deterministic") {
    const auto f = [](double x) { return std::sin(x) + 0.1 * x * x; };
    const MinResult a = brent_minimize(f, -3.0, 1.0, 1e-11);
    const MinResult b = brent_minimize(f, -3.0, 1.0, 1e-11);
    CHECK(a.x == b.x);
    CHECK(a.value == b.value);
}

TEST_CASE("brent rejects an empty bracket") {
    CHECK_THROWS_AS(brent_minimize([](double x) { return x * x; }, 1.0, 1.0, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("bisect finds the root of cos between 1 and 2") {
    const double root = bisect([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-12);
    CHECK(std::abs(root - std::numbers::pi / 2.0) < 1e-11);
}

TEST_CASE("bisect requires a sign change") {
    CHECK_THROWS_AS(bisect([](double x) { return 1.0 + x * x; }, -1.0, 1.0, 1e-10),
                    std::invalid_argument);
}
