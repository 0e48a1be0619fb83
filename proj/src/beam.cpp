#include "slitwave/beam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "slitwave/stable.hpp"

namespace slitwave {

FreeBeam free_beam(double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("t must be >= 0 (got " + std::to_string(t) + ")");
    }
    const double b2 = 1.0 + t * t;
    return FreeBeam{std::sqrt(b2), t / b2};
}

SlitBeam slit_beam(const ReducedParams& g, double t, double tau) {
    g.validate();
    if (!(tau > 0.0)) {
        throw std::invalid_argument("tau must be > 0 (got " + std::to_string(tau) + ")");
    }
    const FreeBeam fb = free_beam(t);

    const double b2 = fb.b * fb.b;
    const double beta2 = g.beta_r * g.beta_r;
    const double a = 1.0 / beta2 + 1.0 / b2;     // combined inverse width^2
    const double c = 1.0 / tau + fb.inv_r;       // combined inverse time
    const double a2c2 = a * a + c * c;

    SlitBeam sb;
    sb.t = t;
    sb.tau = tau;
    const double B2 = tau * tau * a2c2 / a;
    sb.B = std::sqrt(B2);
    sb.inv_R = (a * a + fb.inv_r * c) / (tau * a2c2);
    sb.Delta = tau * g.d_r / (2.0 * beta2 * B2);
    sb.D = (1.0 + tau * fb.inv_r) * g.d_r / (1.0 + beta2 / b2);
    sb.theta = g.d_r * g.d_r * c / (8.0 * beta2 * beta2 * a2c2);
    // Gouy phase: -(1/2) arctan of (t + zeta)/(1 - t*zeta) with zeta = a/c.
    // Both t and zeta are non-negative, so atan2 stays on the branch
    // arctan(t) + arctan(zeta) in (0, pi) and mu is continuous in t.
    const double zeta = a / c;
    sb.mu = -0.5 * std::atan2(t + zeta, 1.0 - t * zeta);
    return sb;
}

}  // namespace slitwave
