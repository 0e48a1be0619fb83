#include "slitwave/moments.hpp"

#include <cmath>

#include "slitwave/stable.hpp"

namespace slitwave {

namespace {

// z = (D/2B)^2 + (Delta*B)^2 >= 0, the packet-overlap exponent. It grows
// like d^2 and reaches ~1e3 at separation maxima, so 1/(1+e^z) terms go
// through inv_one_plus_exp and e^{-z} is safe.
double overlap_exponent(const SlitBeam& sb) {
    return sq(sb.D / (2.0 * sb.B)) + sq(sb.Delta * sb.B);
}

}  // namespace

std::array<double, 4> sigma_xp_terms(const SlitBeam& sb) {
    const double z = overlap_exponent(sb);
    const double ez = std::exp(-z);
    const double B2 = sb.B2();
    return {
        0.5 * B2 * sb.inv_R,
        sb.D * sb.D * sb.inv_R / (4.0 + 4.0 * ez),
        -0.5 * sb.Delta * sb.D,
        -sq(sb.Delta) * B2 * B2 * sb.inv_R * inv_one_plus_exp(z),
    };
}

double sigma_xp(const SlitBeam& sb) {
    const auto t = sigma_xp_terms(sb);
    return t[0] + t[1] + t[2] + t[3];
}

double sigma_xx2(const SlitBeam& sb) {
    const double z = overlap_exponent(sb);
    const double ez = std::exp(-z);
    const double B2 = sb.B2();
    return 0.5 * B2 + (sb.D * sb.D - 4.0 * sq(sb.Delta) * B2 * B2 * ez) / (4.0 + 4.0 * ez);
}

double sigma_pp2(const SlitBeam& sb) {
    const double z = overlap_exponent(sb);
    const double ez = std::exp(-z);
    const double B2 = sb.B2();
    const double free_part = 0.5 / B2 + 0.5 * B2 * sq(sb.inv_R);
    const double cross = sq(sb.D * sb.inv_R - 2.0 * sb.Delta) / (4.0 + 4.0 * ez);
    const double overlap = (sb.D * sb.D / (B2 * B2) +
                            2.0 * sb.Delta * (sb.Delta + sb.D * sb.inv_R)) *
                           inv_one_plus_exp(z);
    return free_part + cross - overlap;
}

CovarianceSummary covariance(const SlitBeam& sb) {
    CovarianceSummary c;
    c.sigma_xx2 = sigma_xx2(sb);
    c.sigma_pp2 = sigma_pp2(sb);
    c.xp_terms = sigma_xp_terms(sb);
    c.sigma_xp = c.xp_terms[0] + c.xp_terms[1] + c.xp_terms[2] + c.xp_terms[3];
    c.det = c.sigma_xx2 * c.sigma_pp2 - c.sigma_xp * c.sigma_xp;
    return c;
}

double sigma_xp(const ReducedParams& g, double t, double tau) {
    return sigma_xp(slit_beam(g, t, tau));
}

double sigma_xx2(const ReducedParams& g, double t, double tau) {
    return sigma_xx2(slit_beam(g, t, tau));
}

double sigma_pp2(const ReducedParams& g, double t, double tau) {
    return sigma_pp2(slit_beam(g, t, tau));
}

CovarianceSummary covariance(const ReducedParams& g, double t, double tau) {
    return covariance(slit_beam(g, t, tau));
}

}  // namespace slitwave
