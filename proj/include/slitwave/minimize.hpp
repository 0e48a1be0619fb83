#ifndef SLITWAVE_MINIMIZE_HPP
#define SLITWAVE_MINIMIZE_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

namespace slitwave {

struct MinResult {
    double x;
    double value;
    int iterations;
};

/// Brent-style derivative-free minimization on [a, b]: golden-section
/// steps with parabolic interpolation where the fit is trustworthy.
/// Deterministic; terminates when the bracket is below xatol.
template <typename F>
MinResult brent_minimize(F&& f, double a, double b, double xatol, int max_iter = 200) {
    if (!(a < b)) throw std::invalid_argument("brent_minimize: need a < b");
    constexpr double golden = 0.3819660112501051;  // 2 - phi

    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double delta = 0.0, delta_prev = 0.0;

    int it = 0;
    for (; it < max_iter; ++it) {
        const double mid = 0.5 * (a + b);
        const double tol = xatol;
        if (std::abs(x - mid) + 0.5 * (b - a) <= 2.0 * tol) break;

        double step = 0.0;
        bool parabolic_ok = false;
        if (std::abs(delta_prev) > tol) {
            // parabola through (v, fv), (w, fw), (x, fx)
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double d_prev = delta_prev;
            delta_prev = delta;
            if (std::abs(p) < std::abs(0.5 * q * d_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                step = p / q;
                parabolic_ok = true;
            }
        }
        if (!parabolic_ok) {
            delta_prev = (x >= mid) ? a - x : b - x;
            step = golden * delta_prev;
        }
        delta = step;
        const double u = (std::abs(step) >= tol)
                             ? x + step
                             : x + (step > 0.0 ? tol : -tol);
        const double fu = f(u);
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return MinResult{x, fx, it};
}

/// Bisection root of f on [a, b]; f(a) and f(b) must differ in sign.
template <typename F>
double bisect(F&& f, double a, double b, double xatol, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("bisect: no sign change on bracket");
    }
    for (int it = 0; it < max_iter && (b - a) > xatol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace slitwave

#endif
