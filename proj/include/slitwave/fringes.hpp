#ifndef SLITWAVE_FRINGES_HPP
#define SLITWAVE_FRINGES_HPP

#include <span>
#include <vector>

#include "slitwave/wavefunction.hpp"

namespace slitwave {

/// Fringe contrast at x: V = sech(D x / B^2). V(0) = 1.
double visibility(const SlitBeam& sb, double x);

/// Which-slit imbalance at x: P = |tanh(D x / B^2)|. P(0) = 0, and
/// P^2 + V^2 = 1 for every x.
double predictability(const SlitBeam& sb, double x);

/// Effective fringe-count index nu = 0.264 * 2 Delta B^2 / D.
/// Degenerate (infinite, fringe-limit-free) when the slits coincide (D = 0).
double fringe_index(const SlitBeam& sb);

/// Strict local maxima of the sampled intensity above 1e-4 of the global
/// peak. Needs at least 3 samples.
int count_fringes(const IntensityProfile& profile);

/// Same counter on an arbitrary sampled intensity series (e.g. the
/// half-range profiles the CSV commands emit).
int count_local_maxima(std::span<const double> intensity);

struct FringeProfile {
    std::vector<double> x;                 // sigma0
    std::vector<double> visibility;
    std::vector<double> predictability;
    std::vector<double> duality_residual;  // |P^2 + V^2 - 1|
    double nu;
};

FringeProfile fringe_profile(const SlitBeam& sb, std::span<const double> xs);

}  // namespace slitwave

#endif
