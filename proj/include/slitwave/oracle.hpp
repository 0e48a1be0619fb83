#ifndef SLITWAVE_ORACLE_HPP
#define SLITWAVE_ORACLE_HPP

#include <complex>
#include <span>
#include <vector>

#include "slitwave/wavefunction.hpp"

namespace slitwave {

/// Controls for the brute-force propagator pipeline.
struct QuadratureSpec {
    double half_width = 12.0;   // integration cutoff in units of the local packet width
    int nodes = 256;            // initial Gauss-Legendre order (auto-doubled to convergence)
    int grid_points = 16384;    // screen grid for moment quadrature
    bool stage_a_numeric = false;  // replace the analytic source->slit stage by quadrature

    void validate() const;  // half_width >= 8, nodes >= 200, grid_points >= 4096
};

/// Free evolution of the initial packet for time t, evaluated from the
/// complex-Gaussian integral result psi(x,t) = (sqrt(pi)(1+it))^{-1/2}
/// exp(-x^2 / (2(1+it))). Independent of the slit-beam parameter set.
/// At t = 0 this is the initial packet itself.
std::complex<double> oracle_stage_a(double x, double t);

/// Raw (unnormalized) screen amplitude from the two-stage pipeline:
/// analytic free flight to the slit plane, aperture multiplication, then
/// Gauss-Legendre quadrature against the slit->screen kernel. Node count
/// is doubled until the value moves by less than 1e-9 relative; throws
/// std::runtime_error with the achieved residual if 65536 nodes are not
/// enough.
std::complex<double> oracle_psi_slit(const ReducedParams& g, double x, double t,
                                     double tau, Slit which,
                                     const QuadratureSpec& spec = {});

/// Pipeline amplitude sampled on a screen grid and normalized to unit L2
/// (trapezoid) on that grid. Convergence is measured on the whole profile.
std::vector<std::complex<double>> oracle_psi_profile(const ReducedParams& g,
                                                     std::span<const double> xs,
                                                     double t, double tau, Slit which,
                                                     const QuadratureSpec& spec = {});

/// Normalized two-slit superposition from the pipeline.
std::vector<std::complex<double>> oracle_psi_total_profile(
    const ReducedParams& g, std::span<const double> xs, double t, double tau,
    const QuadratureSpec& spec = {});

/// Grid-quadrature moments of the closed-form superposition: trapezoid
/// integrals of |psi|^2, |psi'|^2 and x Im(psi* psi') with the analytic
/// x-derivative (no finite differences). The grid is widened until the
/// truncated tail mass is below 1e-10.
struct OracleMoments {
    double sigma_xx2;
    double sigma_pp2;
    double sigma_xp;
    double x_mean;
    double p_mean;
    double tail_mass;
};

OracleMoments oracle_moments(const ReducedParams& g, double t, double tau,
                             const QuadratureSpec& spec = {});

struct ValidationReport {
    double rel_l2_psi;                        // closed-form psi_1 vs pipeline
    std::array<double, 3> moment_rel_errors;  // sigma_xx2, sigma_pp2, sigma_xp
    double t, tau;
    ReducedParams params;

    bool ok(double psi_tol = 1e-6, double moment_tol = 1e-7) const;
};

ValidationReport validate(const ReducedParams& g, double t, double tau,
                          const QuadratureSpec& spec = {});

}  // namespace slitwave

#endif
