#pragma once

#include <span>
#include <vector>

#include "kppcyl/params.hpp"

namespace kppcyl {

/// The two plane-wave dispersion regions of the linearized system,
/// handled as beta-indexed alpha-intervals.
///
/// For beta >= 0 the radial factor is psi1 (supported on a ball), for
/// beta < 0 it is psi2 (growing). The boundary equation yields the
/// coupling functions chi1/chi2 and the branches alpha_D^+-; the field
/// equation yields alpha_d^+- (a hyperbola for beta >= 0 and, when
/// c >= c_KPP, a half-circle for beta < 0).
///
/// Construction locates R1 (first zero of psi1) and beta_bar (first
/// positive zero of d r psi1'(rR) + nu psi1(rR)) once; all evaluation
/// methods are const and safe for concurrent use.
class Dispersion {
public:
    explicit Dispersion(Params p);

    const Params& params() const { return p_; }
    double r1() const { return r1_; }
    double beta_bar() const { return beta_bar_; }

    /// Boundary coupling for beta in [0, beta_bar); 0 at 0, increasing,
    /// diverging at beta_bar.
    double chi1(double beta) const;

    /// Boundary coupling for beta <= 0; 0 at 0, negative and increasing
    /// on (-inf, 0), tending to -mu as beta -> -inf.
    double chi2(double beta) const;

    /// Unique beta in (0, beta_bar) with c^2 = 4 D chi1(beta).
    double beta_tilde(double c) const;

    /// Lower edge of the field-curve domain: sqrt(c_KPP^2 - c^2)/(2d)
    /// for c < c_KPP, else -rho(c).
    double beta_hat(double c) const;

    /// Half-circle radius sqrt(c^2 - c_KPP^2)/(2d), for c >= c_KPP.
    double rho(double c) const;

    /// Wave amplitude mu / (d beta psi'(beta R) + nu psi(beta R)) with
    /// psi = psi1 for beta >= 0 (beta < beta_bar required), psi2 below.
    double gamma_coef(double beta) const;

    /// Boundary-region slice at (c, beta): for 0 <= beta <= beta_tilde(c)
    /// the interval [alpha_D^-, alpha_D^+]; for beta < 0 the clipped
    /// interval [0, alpha_D^+]; empty for beta > beta_tilde(c) or
    /// beta >= beta_bar.
    std::optional<AlphaInterval> alpha_D_interval(double c, double beta) const;

    /// Field-region slice at (c, beta): the hyperbola chord for beta >= 0
    /// (clipped at alpha = 0), the half-disk chord for
    /// -rho(c) <= beta < 0 when c >= c_KPP; empty outside those domains.
    std::optional<AlphaInterval> alpha_d_interval(double c, double beta) const;

    /// Per-beta evaluation of both optional intervals over a grid.
    std::vector<CurveSample> sample_curves(double c,
                                           std::span<const double> beta_grid) const;

private:
    Params p_;
    specfun::HypParams hyp_;
    double r1_;
    double beta_bar_;
};

/// Max absolute residual of the full plane-wave system at
/// (c, alpha, beta, gamma): the field equation, the boundary equation
/// and the flux equation defining gamma.
double dispersion_residual(const Params& p, double c, double alpha, double beta,
                           double gamma);

} // namespace kppcyl
