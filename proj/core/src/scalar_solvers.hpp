#pragma once

// Small scalar root-finding / minimization helpers shared by the core
// modules. Internal header, not installed.

#include <cmath>
#include <utility>

namespace kppcyl::detail {

// Bisection for f with f(lo) and f(hi) of opposite sign, to absolute
// tolerance xtol on the bracket width. Returns the bracket midpoint.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol) {
    double flo = f(lo);
    bool neg_lo = flo < 0.0;
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == neg_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization of a unimodal f on [a, b] to absolute
// tolerance xtol. Returns (argmin, min).
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace kppcyl::detail
