#include "slitwave/extrema.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "slitwave/minimize.hpp"

namespace slitwave {

namespace {

constexpr double kScanStep = 0.01;   // tau0
constexpr double kScanEnd = 10.0;    // tau0
constexpr double kBrentTol = 1e-9;   // tau0
constexpr double kInfStep = 1e-4;    // central-difference step for d2/dt2
constexpr double kInfTol = 1e-7;     // bisection tolerance for t_inf

double eval(const ReducedParams& g, BeamMoment which, double t, double tau) {
    switch (which) {
        case BeamMoment::xp: return sigma_xp(g, t, tau);
        case BeamMoment::xx: return sigma_xx2(g, t, tau);
        case BeamMoment::pp: return sigma_pp2(g, t, tau);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Extremum find_tmax(const ReducedParams& g, BeamMoment which, double tau) {
    const int n = static_cast<int>(kScanEnd / kScanStep);
    int best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n; ++i) {
        const double v = eval(g, which, i * kScanStep, tau);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best <= 1 || best >= n) {
        throw std::runtime_error(
            "no interior maximum in (0, 10] tau0: scan maximum at the bracket boundary");
    }
    const double a = (best - 1) * kScanStep;
    const double b = (best + 1) * kScanStep;
    const auto neg = [&](double t) { return -eval(g, which, t, tau); };
    const MinResult r = brent_minimize(neg, a, b, kBrentTol);
    return Extremum{r.x, -r.value};
}

Extremum find_tinf(const ReducedParams& g, double tau) {
    const double t_max = find_tmax(g, BeamMoment::xp, tau).t;
    const auto second_derivative = [&](double t) {
        return sigma_xp(g, t + kInfStep, tau) - 2.0 * sigma_xp(g, t, tau) +
               sigma_xp(g, t - kInfStep, tau);  // / h^2 omitted: only the sign matters
    };
    // scan (0, t_max) for the concavity sign change
    const double lo0 = 2.0 * kInfStep;
    double prev_t = lo0;
    double prev = second_derivative(prev_t);
    double lo = 0.0, hi = 0.0;
    for (double t = lo0 + kScanStep; t < t_max; t += kScanStep) {
        const double cur = second_derivative(t);
        if ((prev > 0.0) != (cur > 0.0)) {
            lo = prev_t;
            hi = t;
            break;
        }
        prev_t = t;
        prev = cur;
    }
    if (hi == 0.0) {
        throw std::runtime_error("no inflection: d2(sigma_xp)/dt2 has no sign change on (0, t_max)");
    }
    const double t_inf = bisect(second_derivative, lo, hi, kInfTol);
    return Extremum{t_inf, sigma_xp(g, t_inf, tau)};
}

std::vector<ExtremaRow> table1(const ReducedParams& g, std::span<const double> taus) {
    std::vector<ExtremaRow> rows;
    rows.reserve(taus.size());
    for (double tau : taus) {
        const Extremum xp = find_tmax(g, BeamMoment::xp, tau);
        const Extremum xx = find_tmax(g, BeamMoment::xx, tau);
        const Extremum pp = find_tmax(g, BeamMoment::pp, tau);
        const Extremum inf = find_tinf(g, tau);
        rows.push_back(ExtremaRow{tau, xp.t, xx.t, pp.t, inf.t,
                                  xp.value, xx.value, pp.value, inf.value});
    }
    return rows;
}

}  // namespace slitwave
