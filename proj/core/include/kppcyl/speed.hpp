#pragma once

#include "kppcyl/dispersion.hpp"

namespace kppcyl {

enum class TangencyType { Type1, Type2, Mixed };

const char* to_string(TangencyType t);

/// Spreading speed c* with the tangency point between the two
/// dispersion regions, the wave amplitude there and the tangency type
/// (sign of beta_star). overlap_tol records the achieved gap magnitude
/// at the reported point.
struct TangencyResult {
    double c_star;
    double beta_star;
    double alpha_star;
    double gamma_star;
    TangencyType type;
    double overlap_tol;
};

/// The three limit regimes of c*: boundary diffusion removed (c0),
/// dominant boundary diffusion after a sqrt(D) rescaling (c_tilde2),
/// and the R -> infinity half-space speed (c_inf).
struct LimitSpeeds {
    double c0;
    double c_tilde2;
    double c_inf;
};

/// Radius maximizing c* (only when D > 2d) and the maximal speed.
struct RMax {
    double R_M;
    double c_M;
};

/// Signed slice gap max(d_lo, D_lo) - min(d_hi, D_hi) at (c, beta);
/// +inf where either slice is undefined, <= 0 where the slices meet.
double region_gap(const Dispersion& curves, double c, double beta);

/// True iff the two dispersion regions share a point at this c: the
/// signed gap, minimized over a >= 512-point grid of the common beta
/// domain plus golden-section refinement, is <= 0.
bool regions_overlap(double c, const Params& p);
bool regions_overlap(double c, const Dispersion& curves);

/// Thrown when the c-bracket for the tangency bisection cannot be
/// established (overlap at arbitrarily small c, or none up to the cap).
class SolverError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monotone bisection on regions_overlap over c, then tangency-point
/// extraction from the terminal gap minimizer. The returned point
/// satisfies the full dispersion system with small residual (see
/// dispersion_residual).
TangencyResult solve_cstar(const Params& p);

/// Closed-form type test: Type1 if 2d/D > 1 - N nu/(mu R), Type2 if <,
/// Mixed within 1e-12 of equality.
TangencyType classify_type(const Params& p);

/// R_M = N D nu / ((D - 2d) mu), c_M = D c_KPP / sqrt(4d(D-d)).
/// Requires D > 2d.
RMax r_max(const Params& p);

/// D -> 0 limit: first c at which the curve chi1(beta)/c meets the
/// field region. Lies in (0, c_KPP).
double limit_c0(const Params& p);

/// D -> infinity limit of c*(D)/sqrt(D): tangency of the parabola
/// (f0 + d beta^2)/c with the unit-diffusivity boundary region.
double limit_ctilde(const Params& p);

/// R -> infinity limit: c_KPP when D <= 2d, else the half-space
/// tangency speed with chi_inf(beta) = mu d beta / (nu - d beta).
double limit_cinf(const Params& p);

LimitSpeeds limit_speeds(const Params& p);

} // namespace kppcyl
