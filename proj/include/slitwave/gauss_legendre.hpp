#ifndef SLITWAVE_GAUSS_LEGENDRE_HPP
#define SLITWAVE_GAUSS_LEGENDRE_HPP

#include <vector>

namespace slitwave {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1), ascending
    std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on P_n and
/// cached. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace slitwave

#endif
