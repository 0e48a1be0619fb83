#ifndef SLITWAVE_MOMENTS_HPP
#define SLITWAVE_MOMENTS_HPP

#include <array>

#include "slitwave/beam.hpp"

namespace slitwave {

/// Second moments of the two-slit superposition at the screen.
/// Units: sigma_xx2 in sigma0^2, sigma_pp2 in (hbar/sigma0)^2, sigma_xp
/// and the four decomposition terms in hbar, det in hbar^2.
struct CovarianceSummary {
    double sigma_xx2;
    double sigma_pp2;
    double sigma_xp;
    std::array<double, 4> xp_terms;  // signed; sigma_xp is their sum
    double det;                      // sigma_xx2*sigma_pp2 - sigma_xp^2
};

/// The four signed contributions to the position-momentum covariance:
/// curvature term, packet-separation term, linear-phase cross term,
/// and the overlap-suppressed quartic term.
std::array<double, 4> sigma_xp_terms(const SlitBeam& sb);

double sigma_xp(const SlitBeam& sb);
double sigma_xx2(const SlitBeam& sb);
double sigma_pp2(const SlitBeam& sb);
CovarianceSummary covariance(const SlitBeam& sb);

double sigma_xp(const ReducedParams& g, double t, double tau);
double sigma_xx2(const ReducedParams& g, double t, double tau);
double sigma_pp2(const ReducedParams& g, double t, double tau);
CovarianceSummary covariance(const ReducedParams& g, double t, double tau);

}  // namespace slitwave

#endif
