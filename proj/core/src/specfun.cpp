#include "kppcyl/specfun.hpp"

#include <cmath>
#include <limits>

#include "scalar_solvers.hpp"

namespace kppcyl::specfun {

namespace {

void check_series_args(double b, int terms_max, double tol) {
    if (!(b > 0.0))
        throw std::invalid_argument("hyp0f1: series parameter b must be positive");
    if (terms_max < 10 || !(tol > 0.0))
        throw std::invalid_argument("hyp0f1: need terms_max >= 10 and tol > 0");
}

// Renormalization threshold for the scaled sum. 2^512 keeps plenty of
// headroom for the per-term growth.
constexpr double kRescale = 0x1p512;
constexpr double kRescaleInv = 0x1p-512;

} // namespace

double Scaled::to_double() const { return std::ldexp(mantissa, exp2); }

double hyp0f1(double b, double z, int terms_max, double tol) {
    check_series_args(b, terms_max, tol);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < terms_max; ++n) {
        term *= z / ((b + n) * (n + 1));
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum)) return sum;
    }
    throw SeriesTruncationError(std::abs(term),
                                "hyp0f1: series not converged within terms_max");
}

Scaled hyp0f1_scaled(double b, double z, int terms_max, double tol) {
    check_series_args(b, terms_max, tol);
    double term = 1.0;
    double sum = 1.0;
    int exp2 = 0;
    for (int n = 0; n < terms_max; ++n) {
        term *= z / ((b + n) * (n + 1));
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum)) return {sum, exp2};
        if (std::abs(sum) > kRescale || std::abs(term) > kRescale) {
            sum *= kRescaleInv;
            term *= kRescaleInv;
            exp2 += 512;
        }
    }
    throw SeriesTruncationError(std::abs(term),
                                "hyp0f1_scaled: series not converged within terms_max");
}

double psi1(double r, const HypParams& p) {
    return hyp0f1(p.tau + 1.0, -0.25 * r * r, p.terms_max, p.tol);
}

double psi1_prime(double r, const HypParams& p) {
    return -(r / (2.0 * (p.tau + 1.0))) *
           hyp0f1(p.tau + 2.0, -0.25 * r * r, p.terms_max, p.tol);
}

double psi2(double r, const HypParams& p) {
    return hyp0f1(p.tau + 1.0, 0.25 * r * r, p.terms_max, p.tol);
}

double psi2_prime(double r, const HypParams& p) {
    return (r / (2.0 * (p.tau + 1.0))) *
           hyp0f1(p.tau + 2.0, 0.25 * r * r, p.terms_max, p.tol);
}

Psi2Pair psi2_pair(double r, const HypParams& p) {
    const double z = 0.25 * r * r;
    const Scaled a = hyp0f1_scaled(p.tau + 1.0, z, p.terms_max, p.tol);
    const Scaled b = hyp0f1_scaled(p.tau + 2.0, z, p.terms_max, p.tol);
    // Bring both series to a common exponent.
    const int e = std::max(a.exp2, b.exp2);
    const double psi = std::ldexp(a.mantissa, a.exp2 - e);
    const double dpsi =
        (r / (2.0 * (p.tau + 1.0))) * std::ldexp(b.mantissa, b.exp2 - e);
    return {psi, dpsi, e};
}

double psi2_ratio(double r, const HypParams& p, double r_asym) {
    if (r <= -r_asym) {
        // Large-argument Bessel asymptote; the 1/|r| correction vanishes
        // for tau = -1/2, where the ratio is -coth|r| up to e^{-2|r|}.
        return -(1.0 + (2.0 * p.tau + 1.0) / (2.0 * std::abs(r)));
    }
    const Psi2Pair pr = psi2_pair(r, p);
    return pr.psi / pr.dpsi;
}

double first_zero_psi1(const HypParams& p) {
    if (!(p.tau > -1.0))
        throw std::invalid_argument("first_zero_psi1: requires tau > -1");
    // Classical bounds on the first Bessel zero: (tau+1)(tau+3) <=
    // j_{tau,1}^2 <= 2(tau+1)(tau+3). Scan with step guess/64 and
    // bisect the first sign change.
    const double guess = std::sqrt(2.0 * (p.tau + 1.0) * (p.tau + 3.0));
    const double step = guess / 64.0;
    double lo = step;
    double flo = psi1(lo, p);
    for (double hi = lo + step; hi <= 4.0 * guess; hi += step) {
        const double fhi = psi1(hi, p);
        if (flo > 0.0 && fhi <= 0.0) {
            return detail::bisect_root([&](double r) { return psi1(r, p); }, lo,
                                       hi, 1e-12);
        }
        lo = hi;
        flo = fhi;
    }
    throw BracketError("first_zero_psi1: no sign change found in scan range");
}

} // namespace kppcyl::specfun
