#include "slitwave/fringes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "slitwave/stable.hpp"

namespace slitwave {

double visibility(const SlitBeam& sb, double x) {
    return sech(sb.D * x / sb.B2());
}

double predictability(const SlitBeam& sb, double x) {
    return std::abs(std::tanh(sb.D * x / sb.B2()));
}

double fringe_index(const SlitBeam& sb) {
    if (sb.D == 0.0) return std::numeric_limits<double>::infinity();
    return 0.264 * 2.0 * sb.Delta * sb.B2() / sb.D;
}

int count_local_maxima(std::span<const double> intensity) {
    if (intensity.size() < 3) {
        throw std::invalid_argument("fringe counting needs at least 3 samples");
    }
    const double peak = *std::max_element(intensity.begin(), intensity.end());
    const double threshold = 1e-4 * peak;
    // strict maxima; a run of exactly equal samples bounded by smaller
    // neighbours counts once (a maximum at x = 0 lands on a symmetric
    // pair of grid values)
    int count = 0;
    const size_t n = intensity.size();
    size_t i = 1;
    while (i + 1 < n) {
        if (intensity[i] > intensity[i - 1]) {
            size_t j = i;
            while (j + 1 < n && intensity[j + 1] == intensity[i]) ++j;
            if (j + 1 < n && intensity[j + 1] < intensity[i] && intensity[i] > threshold) {
                ++count;
            }
            i = j + 1;
        } else {
            ++i;
        }
    }
    return count;
}

int count_fringes(const IntensityProfile& profile) {
    return count_local_maxima(profile.intensity);
}

FringeProfile fringe_profile(const SlitBeam& sb, std::span<const double> xs) {
    FringeProfile fp;
    fp.x.assign(xs.begin(), xs.end());
    fp.nu = fringe_index(sb);
    fp.visibility.reserve(xs.size());
    fp.predictability.reserve(xs.size());
    fp.duality_residual.reserve(xs.size());
    for (double x : xs) {
        const double v = visibility(sb, x);
        const double p = predictability(sb, x);
        fp.visibility.push_back(v);
        fp.predictability.push_back(p);
        fp.duality_residual.push_back(std::abs(p * p + v * v - 1.0));
    }
    return fp;
}

}  // namespace slitwave
