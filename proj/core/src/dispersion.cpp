#include "kppcyl/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "scalar_solvers.hpp"

namespace kppcyl {

namespace {

// Discriminants in [-kDiscEps, 0) are treated as exactly zero so that
// slices right at tangency do not come out undefined.
constexpr double kDiscEps = 1e-14;

} // namespace

Dispersion::Dispersion(Params p) : p_(p), hyp_(p.hyp()) {
    p_.validate();
    r1_ = specfun::first_zero_psi1(hyp_);
    // First positive zero of r -> d r psi1'(rR) + nu psi1(rR); the
    // function is nu at 0 and negative at R1/R.
    const auto denom = [&](double r) {
        return p_.d * r * specfun::psi1_prime(r * p_.R, hyp_) +
               p_.nu * specfun::psi1(r * p_.R, hyp_);
    };
    beta_bar_ = detail::bisect_root(denom, 0.0, r1_ / p_.R, 1e-12);
}

double Dispersion::chi1(double beta) const {
    if (!(beta >= 0.0 && beta < beta_bar_))
        throw std::domain_error("chi1: beta outside [0, beta_bar)");
    if (beta == 0.0) return 0.0;
    const double r = beta * p_.R;
    const double psi = specfun::psi1(r, hyp_);
    const double dpsi = specfun::psi1_prime(r, hyp_);
    return -p_.mu * p_.d * beta * dpsi / (p_.d * beta * dpsi + p_.nu * psi);
}

double Dispersion::chi2(double beta) const {
    if (!(beta <= 0.0)) throw std::domain_error("chi2: beta must be <= 0");
    if (beta == 0.0) return 0.0;
    // Divide through by psi2' (strictly negative for r < 0) so only the
    // ratio psi2/psi2' enters; that keeps large |beta R| overflow-free.
    const double ratio = specfun::psi2_ratio(beta * p_.R, hyp_);
    return -p_.mu * p_.d * beta / (p_.d * beta + p_.nu * ratio);
}

double Dispersion::beta_tilde(double c) const {
    const double target = c * c / (4.0 * p_.D);
    const double hi = beta_bar_ * (1.0 - 1e-12);
    if (chi1(hi) <= target) return hi;  // pole-side saturation
    return detail::bisect_root([&](double b) { return chi1(b) - target; }, 0.0,
                               hi, 1e-12);
}

double Dispersion::rho(double c) const {
    const double ck = p_.c_kpp();
    if (!(c >= ck)) throw std::domain_error("rho: requires c >= c_KPP");
    return std::sqrt(c * c - ck * ck) / (2.0 * p_.d);
}

double Dispersion::beta_hat(double c) const {
    const double ck = p_.c_kpp();
    if (c < ck) return std::sqrt(ck * ck - c * c) / (2.0 * p_.d);
    return -rho(c);
}

double Dispersion::gamma_coef(double beta) const {
    if (beta >= 0.0) {
        if (beta >= beta_bar_)
            throw std::domain_error("gamma_coef: beta >= beta_bar (sign loss)");
        const double r = beta * p_.R;
        const double den = p_.d * beta * specfun::psi1_prime(r, hyp_) +
                           p_.nu * specfun::psi1(r, hyp_);
        return p_.mu / den;
    }
    const specfun::Psi2Pair pr = specfun::psi2_pair(beta * p_.R, hyp_);
    const double den = p_.d * beta * pr.dpsi + p_.nu * pr.psi;  // scale 2^exp2
    return std::ldexp(p_.mu / den, -pr.exp2);
}

std::optional<AlphaInterval> Dispersion::alpha_D_interval(double c, double beta) const {
    if (beta >= beta_bar_) return std::nullopt;
    if (beta >= 0.0) {
        double disc = c * c - 4.0 * p_.D * chi1(beta);
        if (disc < 0.0) {
            if (disc < -kDiscEps) return std::nullopt;
            disc = 0.0;
        }
        const double s = std::sqrt(disc);
        return AlphaInterval{(c - s) / (2.0 * p_.D), (c + s) / (2.0 * p_.D)};
    }
    // chi2 < 0 makes alpha_D^- negative; the admissible region is the
    // part between the graph and the beta-axis.
    const double s = std::sqrt(c * c - 4.0 * p_.D * chi2(beta));
    return AlphaInterval{0.0, (c + s) / (2.0 * p_.D)};
}

std::optional<AlphaInterval> Dispersion::alpha_d_interval(double c, double beta) const {
    const double ck = p_.c_kpp();
    if (beta >= 0.0) {
        double disc = c * c - ck * ck + 4.0 * p_.d * p_.d * beta * beta;
        if (disc < 0.0) {
            if (disc < -kDiscEps) return std::nullopt;
            disc = 0.0;
        }
        const double s = std::sqrt(disc);
        return AlphaInterval{std::max((c - s) / (2.0 * p_.d), 0.0),
                             (c + s) / (2.0 * p_.d)};
    }
    if (c < ck) return std::nullopt;
    const double r = rho(c);
    double disc = r * r - beta * beta;
    if (disc < 0.0) {
        if (disc < -kDiscEps) return std::nullopt;
        disc = 0.0;
    }
    const double t = std::sqrt(disc);
    const double mid = c / (2.0 * p_.d);
    return AlphaInterval{mid - t, mid + t};
}

std::vector<CurveSample> Dispersion::sample_curves(
    double c, std::span<const double> beta_grid) const {
    for (size_t i = 1; i < beta_grid.size(); ++i)
        if (!(beta_grid[i] > beta_grid[i - 1]))
            throw std::invalid_argument("sample_curves: grid must be strictly increasing");
    std::vector<CurveSample> out;
    out.reserve(beta_grid.size());
    for (double b : beta_grid)
        out.push_back({b, alpha_d_interval(c, b), alpha_D_interval(c, b)});
    return out;
}

double dispersion_residual(const Params& p, double c, double alpha, double beta,
                           double gamma) {
    const auto hyp = p.hyp();
    double gpsi, gdpsi, field;
    if (beta >= 0.0) {
        const double r = beta * p.R;
        gpsi = gamma * specfun::psi1(r, hyp);
        gdpsi = gamma * specfun::psi1_prime(r, hyp);
        field = -p.d * alpha * alpha + p.d * beta * beta + c * alpha - p.f0;
    } else {
        const specfun::Psi2Pair pr = specfun::psi2_pair(beta * p.R, hyp);
        const double g = std::ldexp(gamma, pr.exp2);
        gpsi = g * pr.psi;
        gdpsi = g * pr.dpsi;
        field = -p.d * alpha * alpha - p.d * beta * beta + c * alpha - p.f0;
    }
    const double boundary = -p.D * alpha * alpha + c * alpha - p.nu * gpsi + p.mu;
    const double flux = p.d * beta * gdpsi + p.nu * gpsi - p.mu;
    return std::max({std::abs(field), std::abs(boundary), std::abs(flux)});
}

} // namespace kppcyl
