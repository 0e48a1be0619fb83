#ifndef SLITWAVE_WAVEFUNCTION_HPP
#define SLITWAVE_WAVEFUNCTION_HPP

#include <complex>
#include <vector>

#include "slitwave/beam.hpp"

namespace slitwave {

enum class Slit { one, two };

enum class Normalization { unit_area, unit_peak };

/// Single-slit wavepacket at the screen, units sigma0^(-1/2).
/// Slit two is slit one with d -> -d: the envelope center and the linear
/// phase flip sign, theta and mu are unchanged (they depend on d^2).
std::complex<double> psi_slit(const SlitBeam& sb, double x, Slit which);

/// Normalization constant N of the two-slit superposition,
/// N^2 = 2 + 2 exp[-(D/2B)^2 - (Delta B)^2]. Always in [sqrt(2), 2].
double superposition_norm(const SlitBeam& sb);

/// Normalized superposition (psi_1 + psi_2)/N.
std::complex<double> psi_total(const SlitBeam& sb, double x);

/// Screen intensity with I0 = scale. The envelope is evaluated in the
/// two-Gaussian form so nothing overflows at large packet separation.
double intensity(const SlitBeam& sb, double x, double scale = 1.0);

/// Intensity envelope (the fringe-free factor) with I0 = scale.
double intensity_envelope(const SlitBeam& sb, double x, double scale = 1.0);

/// I0 for the requested normalization: unit_area makes the intensity
/// integrate to one (it equals |psi_total|^2); unit_peak makes the global
/// maximum equal one.
double intensity_scale(const SlitBeam& sb, Normalization norm);

/// Symmetric screen grid [-x_max, x_max] with n points.
struct GridSpec {
    double x_max;  // sigma0
    int n;

    void validate() const;
};

/// Default grid: x_max = D/2 + 8B, 4096 points. Covers both envelopes
/// past the 1e-27 tail and resolves the fringe period with >= 20 points.
GridSpec default_grid(const SlitBeam& sb);

/// Grid points x_k = (2k - (n-1)) * x_max/(n-1), exactly symmetric in
/// floating point.
std::vector<double> make_grid(const GridSpec& spec);

struct IntensityProfile {
    std::vector<double> x;          // sigma0
    std::vector<double> intensity;
    std::vector<double> envelope;
    Normalization normalization;
};

IntensityProfile intensity_profile(const SlitBeam& sb, const GridSpec& spec,
                                   Normalization norm);

}  // namespace slitwave

#endif
