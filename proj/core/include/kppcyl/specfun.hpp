#pragma once

#include <stdexcept>
#include <string>

namespace kppcyl::specfun {

/// Truncation policy for the 0F1 power series.
///
/// tau = N/2 - 1 is the Bessel-type order induced by the boundary
/// dimension N; the series requires tau > -1.
struct HypParams {
    double tau;
    int terms_max = 500;
    double tol = 1e-16;

    static HypParams for_dimension(int n_dim) {
        return HypParams{0.5 * n_dim - 1.0, 500, 1e-16};
    }
};

/// Thrown when the series does not meet the relative tolerance within
/// terms_max terms. Carries the magnitude of the last term computed.
class SeriesTruncationError : public std::runtime_error {
public:
    SeriesTruncationError(double last_term_mag, std::string what)
        : std::runtime_error(std::move(what)), last_term(last_term_mag) {}
    double last_term;
};

/// Thrown when a bracketing scan fails to find a sign change.
class BracketError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 0F1(;b;z) = sum_n Gamma(b)/Gamma(b+n) z^n/n!, b > 0.
/// Stops once |term| < tol*|partial sum|; throws SeriesTruncationError
/// past terms_max terms.
double hyp0f1(double b, double z, int terms_max = 500, double tol = 1e-16);

/// A value held as mantissa * 2^exp2, so the 0F1 series can be summed
/// for arguments whose result exceeds the double range.
struct Scaled {
    double mantissa;
    int exp2;
    double to_double() const;
};

Scaled hyp0f1_scaled(double b, double z, int terms_max = 500, double tol = 1e-16);

/// Radial profile on the ball: psi1(r) = 0F1(;tau+1;-r^2/4), r >= 0.
/// psi1(0) = 1, psi1'(0) = 0, decreasing up to its first zero.
double psi1(double r, const HypParams& p);
double psi1_prime(double r, const HypParams& p);

/// Radial profile on the whole space: psi2(r) = 0F1(;tau+1;r^2/4), r <= 0.
/// Positive with nonpositive derivative.
double psi2(double r, const HypParams& p);
double psi2_prime(double r, const HypParams& p);

/// psi2 and psi2' evaluated together with a shared binary exponent, for
/// consumers that must form ratios or linear combinations without
/// overflowing (the values grow like e^|r|).
struct Psi2Pair {
    double psi;   // psi2(r)  = psi  * 2^exp2
    double dpsi;  // psi2'(r) = dpsi * 2^exp2
    int exp2;
};
Psi2Pair psi2_pair(double r, const HypParams& p);

/// psi2(r)/psi2'(r). Below r_asym the large-argument asymptote
/// -(1 + (2 tau + 1)/(2|r|)) is returned; for tau = -1/2 (N = 1) this is
/// exactly the limit -1.
double psi2_ratio(double r, const HypParams& p, double r_asym = 50.0);

/// First positive zero R1 of psi1, by bracket scan + bisection to 1e-12.
double first_zero_psi1(const HypParams& p);

} // namespace kppcyl::specfun
