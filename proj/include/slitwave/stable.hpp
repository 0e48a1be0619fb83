#ifndef SLITWAVE_STABLE_HPP
#define SLITWAVE_STABLE_HPP

#include <cmath>

namespace slitwave {

inline double sq(double x) { return x * x; }

/// 1/(1 + exp(z)) evaluated without overflow for any z.
/// For z >= 0 this is exp(-z)/(1 + exp(-z)); exp is only ever
/// called on non-positive arguments.
inline double inv_one_plus_exp(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(z));
}

/// sech(y) without overflow: 2 e^{-|y|} / (1 + e^{-2|y|}).
inline double sech(double y) {
    const double e = std::exp(-std::abs(y));
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace slitwave

#endif
