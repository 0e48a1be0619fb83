#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "slitwave/gauss_legendre.hpp"

using namespace slitwave;

namespace {

double integrate(int n, double (*f)(double)) {
    const auto& rule = gauss_legendre(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

}  // namespace

TEST_CASE("weights sum to the interval length") {
    for (int n : {2, 7, 64, 333, 1024}) {
        const auto& rule = gauss_legendre(n);
        double s = 0.0;
        for (double w : rule.weights) s += w;
        CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("nodes are symmetric and ascending") {
    const auto& rule = gauss_legendre(33);
    for (int i = 0; i < 33; ++i) {
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[32 - i]).epsilon(1e-15));
        if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK(rule.nodes[16] == doctest::Approx(0.0));
}

TEST_CASE("degree 2n-1 polynomials are exact") {
    // int_{-1}^{1} x^k dx = 2/(k+1) for even k
    const auto& rule = gauss_legendre(5);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 8);
    CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("exp integral matches e - 1/e") {
    const double exact = std::exp(1.0) - std::exp(-1.0);
    CHECK(integrate(12, [](double x) { return std::exp(x); }) ==
          doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand converges with enough nodes") {
    // int_{-1}^{1} cos(50x) dx = 2 sin(50)/50
    const double exact = 2.0 * std::sin(50.0) / 50.0;
    CHECK(std::abs(integrate(64, [](double x) { return std::cos(50.0 * x); }) - exact) < 1e-12);
    CHECK(std::abs(integrate(128, [](double x) { return std::cos(50.0 * x); }) - exact) < 1e-14);
}

TEST_CASE("rejects degenerate order") {
    CHECK_THROWS_AS(gauss_legendre(1), std::invalid_argument);
}
