#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slitwave/moments.hpp"
#include "slitwave/stable.hpp"
#include "slitwave/oracle.hpp"
#include "test_util.hpp"

using namespace slitwave;
using slitwave::testing::neutron_reduced;
using slitwave::testing::rel_diff;
using cd = std::complex<double>;

namespace {

double rel_l2(std::span<const cd> a, std::span<const cd> b) {
    double diff = 0.0, ref = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a[i] - b[i]);
        ref += std::norm(b[i]);
    }
    return std::sqrt(diff / ref);
}

std::vector<cd> closed_form_profile(const SlitBeam& sb, std::span<const double> xs,
                                    Slit which) {
    std::vector<cd> psi(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) psi[i] = psi_slit(sb, xs[i], which);
    return psi;
}

}  // namespace

TEST_CASE("spec guards") {
    QuadratureSpec spec;
    spec.half_width = 4.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.nodes = 100;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.grid_points = 1024;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}

TEST_CASE("free flight spreads the packet to sqrt(2) width at t = tau0") {
    const double a0 = std::abs(oracle_stage_a(0.0, 1.0));
    const double a1 = std::abs(oracle_stage_a(1.0, 1.0));
    const double b2 = -1.0 / (2.0 * std::log(a1 / a0));
    CHECK(rel_diff(b2, 2.0) < 1e-9);
    // and the peak amplitude drops accordingly
    CHECK(rel_diff(a0, std::pow(std::numbers::pi, -0.25) / std::pow(2.0, 0.25)) < 1e-12);
}

TEST_CASE("zero flight time returns the initial packet") {
    for (double x : {0.0, 0.7, -2.3}) {
        const cd v = oracle_stage_a(x, 0.0);
        const double expected = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
        CHECK(std::abs(v - cd{expected, 0.0}) < 1e-15);
    }
}

TEST_CASE("node doubling converges: a more generous spec gives the same value") {
    const ReducedParams g = neutron_reduced();
    QuadratureSpec coarse;  // defaults
    QuadratureSpec fine;
    fine.nodes = 2048;
    const cd a = oracle_psi_slit(g, 10.0, 1.42, 18.0, Slit::one, coarse);
    const cd b = oracle_psi_slit(g, 10.0, 1.42, 18.0, Slit::one, fine);
    CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
}

TEST_CASE("pipeline matches the closed-form single-slit packet") {
    const ReducedParams g = neutron_reduced();
    for (auto [t, tau] : {std::pair{0.2, 18.0}, {0.0, 18.0}, {1.42, 18.0}}) {
        const SlitBeam sb = slit_beam(g, t, tau);
        const auto xs = make_grid(default_grid(sb));
        const auto oracle = oracle_psi_profile(g, xs, t, tau, Slit::one);
        const auto closed = closed_form_profile(sb, xs, Slit::one);
        CHECK(rel_l2(oracle, closed) <= 1e-6);
    }
}

TEST_CASE("pipeline matches the closed-form superposition including phases") {
    const ReducedParams g = neutron_reduced();
    const double t = 1.42, tau = 18.0;
    const SlitBeam sb = slit_beam(g, t, tau);
    const auto xs = make_grid(default_grid(sb));
    const auto oracle = oracle_psi_total_profile(g, xs, t, tau);
    std::vector<cd> closed(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) closed[i] = psi_total(sb, xs[i]);
    CHECK(rel_l2(oracle, closed) <= 1e-6);
    // the intensities then agree in the same sense
    double diff = 0.0, ref = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        diff += sq(std::norm(oracle[i]) - std::norm(closed[i]));
        ref += sq(std::norm(closed[i]));
    }
    CHECK(std::sqrt(diff / ref) <= 1e-6);
}

TEST_CASE("superposition normalization constant checks out against quadrature") {
    const ReducedParams g = neutron_reduced();
    const double t = 0.52, tau = 18.0;
    const SlitBeam sb = slit_beam(g, t, tau);
    const auto xs = make_grid(default_grid(sb));
    // normalize each slit packet to unit grid norm, then combine with the
    // closed-form constant: the result must again have unit norm
    const auto one = oracle_psi_profile(g, xs, t, tau, Slit::one);
    const auto two = oracle_psi_profile(g, xs, t, tau, Slit::two);
    const double n = superposition_norm(sb);
    const double h = xs[1] - xs[0];
    double norm = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double w = (i == 0 || i + 1 == xs.size()) ? 0.5 * h : h;
        norm += w * std::norm((one[i] + two[i]) / n);
    }
    CHECK(std::abs(norm - 1.0) <= 1e-7);
}

TEST_CASE("grid moments: symmetry zeros and agreement with the closed forms") {
    const ReducedParams g = neutron_reduced();
    const OracleMoments om = oracle_moments(g, 1.42, 18.0);
    CHECK(std::abs(om.x_mean) <= 1e-10);
    CHECK(std::abs(om.p_mean) <= 1e-10);
    CHECK(om.tail_mass <= 1e-10);

    const CovarianceSummary cs = covariance(g, 1.42, 18.0);
    CHECK(rel_diff(cs.sigma_xx2, om.sigma_xx2) <= 1e-7);
    CHECK(rel_diff(cs.sigma_pp2, om.sigma_pp2) <= 1e-7);
    CHECK(rel_diff(cs.sigma_xp, om.sigma_xp) <= 1e-7);
}

TEST_CASE("grid moments saturate the determinant bound for one slit") {
    const ReducedParams g{1.0, 0.0};
    const OracleMoments om = oracle_moments(g, 1.3, 7.0);
    const double det = om.sigma_xx2 * om.sigma_pp2 - om.sigma_xp * om.sigma_xp;
    CHECK(rel_diff(det, 0.25) <= 1e-8);
}

namespace {

// fringe-model shape with unit overall scale
double fringe_shape(double x, double B, double D, double Delta) {
    const double B2 = B * B;
    const double env = 0.5 * (std::exp(-sq(x - D / 2.0) / B2) + std::exp(-sq(x + D / 2.0) / B2));
    return env + std::exp(-(x * x + sq(D / 2.0)) / B2) * std::cos(2.0 * Delta * x);
}

struct FringeFit {
    double B, D, Delta, residual;
};

// least squares of the fringe model against sampled data: the overall
// scale is solved linearly, (B, D, Delta) by Gauss-Newton with a
// central-difference Jacobian
FringeFit fit_fringe_model(std::span<const double> xs, std::span<const double> data,
                           double B0, double D0, double Delta0) {
    double p[3] = {B0, D0, Delta0};
    const size_t n = xs.size();
    std::vector<double> shape(n), j0(n), j1(n), j2(n);
    double residual = 0.0;
    for (int iter = 0; iter < 30; ++iter) {
        double ss = 0.0, sd = 0.0;
        for (size_t i = 0; i < n; ++i) {
            shape[i] = fringe_shape(xs[i], p[0], p[1], p[2]);
            ss += shape[i] * shape[i];
            sd += shape[i] * data[i];
        }
        const double scale = sd / ss;
        for (int c = 0; c < 3; ++c) {
            const double h = 1e-7 * std::abs(p[c]);
            double q[3] = {p[0], p[1], p[2]};
            q[c] = p[c] + h;
            std::vector<double>& col = (c == 0) ? j0 : (c == 1) ? j1 : j2;
            for (size_t i = 0; i < n; ++i) {
                col[i] = scale * (fringe_shape(xs[i], q[0], q[1], q[2]) - shape[i]) / h;
            }
        }
        double jtj[3][3] = {};
        double jtr[3] = {};
        residual = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double r = data[i] - scale * shape[i];
            residual += r * r;
            const double row[3] = {j0[i], j1[i], j2[i]};
            for (int a = 0; a < 3; ++a) {
                jtr[a] += row[a] * r;
                for (int b = 0; b < 3; ++b) jtj[a][b] += row[a] * row[b];
            }
        }
        // Cramer solve of the 3x3 normal equations
        const double det = jtj[0][0] * (jtj[1][1] * jtj[2][2] - jtj[1][2] * jtj[2][1]) -
                           jtj[0][1] * (jtj[1][0] * jtj[2][2] - jtj[1][2] * jtj[2][0]) +
                           jtj[0][2] * (jtj[1][0] * jtj[2][1] - jtj[1][1] * jtj[2][0]);
        REQUIRE(det != 0.0);
        auto solve = [&](int c) {
            double m[3][3];
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) m[a][b] = (b == c) ? jtr[a] : jtj[a][b];
            }
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) /
                   det;
        };
        const double step[3] = {solve(0), solve(1), solve(2)};
        for (int c = 0; c < 3; ++c) p[c] += step[c];
        if (std::abs(step[0]) < 1e-12 * p[0] && std::abs(step[1]) < 1e-12 * p[1] &&
            std::abs(step[2]) < 1e-12 * p[2]) {
            break;
        }
    }
    return FringeFit{p[0], p[1], p[2], std::sqrt(residual)};
}

}  // namespace

TEST_CASE("oracle intensity fits the closed-form fringe model") {
    // fit the fringe model to the quadrature intensity with the beam
    // parameters free, starting away from the truth; the recovered fringe
    // spacing pi/Delta, width B and separation D must land on the closed
    // forms
    const ReducedParams g = neutron_reduced();
    const double t = 18.0, tau = 18.0;
    const SlitBeam sb = slit_beam(g, t, tau);
    const auto xs = make_grid(default_grid(sb));
    const auto psi = oracle_psi_total_profile(g, xs, t, tau);
    std::vector<double> intensity(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) intensity[i] = std::norm(psi[i]);

    const FringeFit fit = fit_fringe_model(xs, intensity, 1.08 * sb.B, 0.95 * sb.D,
                                           1.05 * sb.Delta);
    CHECK(rel_diff(fit.B, sb.B) < 1e-4);
    CHECK(rel_diff(fit.D, sb.D) < 1e-4);
    CHECK(rel_diff(fit.Delta, sb.Delta) < 1e-4);
    const double spacing = std::numbers::pi / fit.Delta;
    CHECK(rel_diff(spacing, std::numbers::pi / sb.Delta) < 1e-4);
}

TEST_CASE("fully numeric pipeline agrees with the analytic source stage") {
    const ReducedParams g = neutron_reduced();
    QuadratureSpec numeric;
    numeric.stage_a_numeric = true;
    const double t = 0.52, tau = 18.0;
    const SlitBeam sb = slit_beam(g, t, tau);
    const GridSpec grid{sb.D / 2.0 + 8.0 * sb.B, 256};  // keep the double quadrature cheap
    const auto xs = make_grid(grid);
    const auto full_numeric = oracle_psi_profile(g, xs, t, tau, Slit::one, numeric);
    const auto analytic = oracle_psi_profile(g, xs, t, tau, Slit::one);
    CHECK(rel_l2(full_numeric, analytic) <= 1e-7);
}

TEST_CASE("fully numeric source stage is refused below its resolution limit") {
    QuadratureSpec numeric;
    numeric.stage_a_numeric = true;
    const ReducedParams g = neutron_reduced();
    const std::vector<double> xs{-1.0, 0.0, 1.0};
    CHECK_THROWS_AS(oracle_psi_profile(g, xs, 0.05, 18.0, Slit::one, numeric),
                    std::invalid_argument);
}

TEST_CASE("validation report on reference points") {
    const ReducedParams g = neutron_reduced();
    for (auto [t, tau] : {std::pair{0.2, 18.0}, {18.0, 30.0}}) {
        const ValidationReport r = validate(g, t, tau);
        CHECK(r.rel_l2_psi <= 1e-6);
        for (double e : r.moment_rel_errors) {
            CHECK(e >= 0.0);
            CHECK(e <= 1e-7);
        }
        CHECK(r.ok());
        CHECK(r.t == t);
        CHECK(r.tau == tau);
    }
}
