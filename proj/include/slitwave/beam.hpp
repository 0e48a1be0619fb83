#ifndef SLITWAVE_BEAM_HPP
#define SLITWAVE_BEAM_HPP

#include "slitwave/params.hpp"

namespace slitwave {

/// Free-propagation quantities at time t (units of tau0).
/// The wavefront curvature is held as 1/r: every downstream formula uses
/// 1/r and the t = 0 limit is then simply inv_r = 0.
struct FreeBeam {
    double b;      // beam width [sigma0], b^2 = 1 + t^2
    double inv_r;  // inverse curvature time [1/tau0], 1/r = t/(1 + t^2)

    double r() const { return 1.0 / inv_r; }  // +inf at t = 0
};

/// b(t), 1/r(t) for free flight. t >= 0 required.
FreeBeam free_beam(double t);

/// Post-slit beam parameters at source->slit time t and slit->screen
/// time tau, both in units of tau0. Lengths in sigma0, times in tau0.
struct SlitBeam {
    double t = 0.0;
    double tau = 0.0;
    double B = 0.0;      // beam width at the screen [sigma0]
    double inv_R = 0.0;  // inverse curvature time [1/tau0]; quadratic phase is x^2*inv_R/2
    double Delta = 0.0;  // linear phase coefficient [1/sigma0]; fringe period pi/Delta
    double D = 0.0;      // packet separation at the screen [sigma0]
    double theta = 0.0;  // constant phase from the aperture offset [rad]
    double mu = 0.0;     // Gouy phase for one slit [rad], in (-pi/2, 0]

    double R() const { return 1.0 / inv_R; }
    double B2() const { return B * B; }
};

/// Evaluates the slit-beam parameters. t >= 0, tau > 0 required.
/// mu uses a two-argument arctangent so the branch is continuous in t.
SlitBeam slit_beam(const ReducedParams& g, double t, double tau);

}  // namespace slitwave

#endif
