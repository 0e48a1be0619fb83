#include "slitwave/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slitwave {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(field) + " must be > 0 (got " +
                                    std::to_string(v) + ")");
    }
}

void require_non_negative(double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(field) + " must be >= 0 (got " +
                                    std::to_string(v) + ")");
    }
}

}  // namespace

void ReducedParams::validate() const {
    require_positive(beta_r, "beta_r");
    require_non_negative(d_r, "d_r");
}

void ExperimentParams::validate() const {
    require_positive(mass, "mass");
    require_positive(sigma0, "sigma0");
    require_positive(beta, "beta");
    require_non_negative(d, "d");
    require_positive(hbar, "hbar");
    if (lambda_dB != 0.0) require_positive(lambda_dB, "lambda_dB");
}

double ExperimentParams::tau0() const {
    validate();
    return mass * sigma0 * sigma0 / hbar;
}

double ExperimentParams::velocity_from_lambda() const {
    validate();
    require_positive(lambda_dB, "lambda_dB");
    return 2.0 * std::numbers::pi * hbar / (mass * lambda_dB);
}

ReducedParams ExperimentParams::reduce() const {
    validate();
    return ReducedParams{beta / sigma0, d / sigma0};
}

ExperimentParams ExperimentParams::neutron() {
    ExperimentParams p;
    p.mass = 1.67e-27;
    p.sigma0 = 7.8e-6;
    p.beta = 7.8e-6;
    p.d = 125e-6;
    p.lambda_dB = 2e-9;
    return p;
}

}  // namespace slitwave
