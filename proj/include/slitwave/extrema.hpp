#ifndef SLITWAVE_EXTREMA_HPP
#define SLITWAVE_EXTREMA_HPP

#include <array>
#include <span>
#include <vector>

#include "slitwave/moments.hpp"

namespace slitwave {

enum class BeamMoment { xp, xx, pp };

struct Extremum {
    double t;      // tau0
    double value;  // sigma_xp [hbar], sigma_xx^2 [sigma0^2] or sigma_pp^2 [(hbar/sigma0)^2]
};

/// Location of the interior maximum of the chosen moment over t at fixed
/// tau. Coarse scan over (0, 10] at step 0.01, then Brent refinement of
/// the negated quantity to 1e-9 absolute in t. Throws std::runtime_error
/// if the scan maximum sits on the bracket boundary.
Extremum find_tmax(const ReducedParams& g, BeamMoment which, double tau);

/// Inflection point of sigma_xp(t) on (0, t_max): root of the
/// central-difference second derivative (h = 1e-4), bisected to 1e-7.
/// Throws std::runtime_error if no sign change is found.
Extremum find_tinf(const ReducedParams& g, double tau);

struct ExtremaRow {
    double tau;
    double t_max_xp;
    double t_max_xx;
    double t_max_pp;
    double t_inf_xp;
    double xp_max;      // hbar
    double xx2_max;     // sigma0^2
    double pp2_max;     // (hbar/sigma0)^2
    double xp_at_inf;   // hbar
};

inline constexpr std::array<double, 6> kTable1Taus{2.0, 8.0, 18.0, 50.0, 100.0, 1000.0};

std::vector<ExtremaRow> table1(const ReducedParams& g,
                               std::span<const double> taus = kTable1Taus);

}  // namespace slitwave

#endif
