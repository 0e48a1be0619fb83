#include "slitwave/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "slitwave/minimize.hpp"
#include "slitwave/stable.hpp"

namespace slitwave {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

std::complex<double> psi_slit(const SlitBeam& sb, double x, Slit which) {
    const double sign = (which == Slit::one) ? 1.0 : -1.0;  // slit two: d -> -d
    const double dd = sign * sb.D;
    const double delta = sign * sb.Delta;
    const double amp = std::exp(-sq(x + dd / 2.0) / (2.0 * sb.B2())) /
                       std::sqrt(sb.B * kSqrtPi);
    const double phase = 0.5 * x * x * sb.inv_R + delta * x + sb.theta + sb.mu;
    return std::polar(amp, phase);
}

double superposition_norm(const SlitBeam& sb) {
    const double z = sq(sb.D / (2.0 * sb.B)) + sq(sb.Delta * sb.B);
    return std::sqrt(2.0 + 2.0 * std::exp(-z));
}

std::complex<double> psi_total(const SlitBeam& sb, double x) {
    return (psi_slit(sb, x, Slit::one) + psi_slit(sb, x, Slit::two)) /
           superposition_norm(sb);
}

double intensity_envelope(const SlitBeam& sb, double x, double scale) {
    const double B2 = sb.B2();
    return 0.5 * scale *
           (std::exp(-sq(x - sb.D / 2.0) / B2) + std::exp(-sq(x + sb.D / 2.0) / B2));
}

double intensity(const SlitBeam& sb, double x, double scale) {
    const double B2 = sb.B2();
    const double cross = std::exp(-(x * x + sq(sb.D / 2.0)) / B2) *
                         std::cos(2.0 * sb.Delta * x);
    return intensity_envelope(sb, x, scale) + scale * cross;
}

double intensity_scale(const SlitBeam& sb, Normalization norm) {
    if (norm == Normalization::unit_area) {
        const double n2 = 2.0 + 2.0 * std::exp(-sq(sb.D / (2.0 * sb.B)) -
                                               sq(sb.Delta * sb.B));
        return 2.0 / (n2 * sb.B * kSqrtPi);
    }
    // unit_peak: locate the global maximum of the raw intensity on x >= 0
    // (the pattern is symmetric) by coarse scan plus local refinement.
    const double hi = sb.D / 2.0 + 8.0 * sb.B;
    const int n = 4096;
    double best_x = 0.0;
    double best = intensity(sb, 0.0);
    for (int i = 1; i < n; ++i) {
        const double x = hi * i / (n - 1);
        const double v = intensity(sb, x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    const double h = hi / (n - 1);
    const auto neg = [&sb](double x) { return -intensity(sb, x); };
    const MinResult r = brent_minimize(neg, std::max(0.0, best_x - h), best_x + h, 1e-12);
    return 1.0 / std::max(best, -r.value);
}

void GridSpec::validate() const {
    if (!(x_max > 0.0)) {
        throw std::invalid_argument("grid x_max must be > 0 (got " +
                                    std::to_string(x_max) + ")");
    }
    if (n < 3) {
        throw std::invalid_argument("grid needs at least 3 points (got " +
                                    std::to_string(n) + ")");
    }
}

GridSpec default_grid(const SlitBeam& sb) {
    return GridSpec{sb.D / 2.0 + 8.0 * sb.B, 4096};
}

std::vector<double> make_grid(const GridSpec& spec) {
    spec.validate();
    std::vector<double> x(spec.n);
    const double step = spec.x_max / (spec.n - 1);
    for (int k = 0; k < spec.n; ++k) {
        x[k] = static_cast<double>(2 * k - (spec.n - 1)) * step;
    }
    return x;
}

IntensityProfile intensity_profile(const SlitBeam& sb, const GridSpec& spec,
                                   Normalization norm) {
    IntensityProfile p;
    p.x = make_grid(spec);
    p.normalization = norm;
    const double scale = intensity_scale(sb, norm);
    p.intensity.reserve(p.x.size());
    p.envelope.reserve(p.x.size());
    for (double xi : p.x) {
        p.intensity.push_back(intensity(sb, xi, scale));
        p.envelope.push_back(intensity_envelope(sb, xi, scale));
    }
    return p;
}

}  // namespace slitwave
