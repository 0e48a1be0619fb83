#ifndef SLITWAVE_PARAMS_HPP
#define SLITWAVE_PARAMS_HPP

namespace slitwave {

// Reduced Planck constant [J s] used for SI <-> internal conversions.
// kReferenceHbar is the rounded value the reference computations in this
// project are calibrated against (tau0 = 1.02 ms for the neutron set);
// kCodataHbar is the CODATA 2018 value, selectable via --hbar codata.
inline constexpr double kReferenceHbar = 1.0e-34;
inline constexpr double kCodataHbar = 1.054571817e-34;

/// Slit geometry in internal units: lengths in sigma0, times in tau0,
/// momenta in hbar/sigma0, actions in hbar. All model formulas operate
/// on this representation; SI appears only at the I/O boundary.
struct ReducedParams {
    double beta_r;  // slit half-aperture width / sigma0
    double d_r;     // slit separation / sigma0

    void validate() const;  // throws std::invalid_argument naming the field
};

/// Physical configuration of the interferometer in SI units.
struct ExperimentParams {
    double mass;    // kg
    double sigma0;  // m, transverse width of the initial packet
    double beta;    // m, Gaussian width of each slit aperture
    double d;       // m, center-to-center slit separation
    double lambda_dB = 0.0;       // m, de Broglie wavelength (0 = unset);
                                  // only used for time <-> distance conversion
    double hbar = kReferenceHbar; // J s

    void validate() const;  // throws std::invalid_argument naming the field

    /// Intrinsic spreading time m sigma0^2 / hbar [s].
    double tau0() const;

    /// Longitudinal velocity from the de Broglie wavelength, v = 2*pi*hbar/(m*lambda) [m/s].
    double velocity_from_lambda() const;

    ReducedParams reduce() const;

    /// Cold-neutron double-slit parameter set (Zeilinger et al. geometry).
    static ExperimentParams neutron();
};

}  // namespace slitwave

#endif
