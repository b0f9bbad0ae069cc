#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "kppcyl/specfun.hpp"

namespace kppcyl {

/// Physical parameters of the cylinder-with-diffusive-boundary model.
///
/// d, D are the field and boundary diffusivities, mu/nu the exchange
/// rates (leave/join the boundary), R the cylinder radius, N the
/// boundary dimension count and f0 = f'(0) the linearized reaction rate.
struct Params {
    double d = 1.0;
    double D = 1.0;
    double mu = 1.0;
    double nu = 1.0;
    double R = 1.0;
    int N = 1;
    double f0 = 1.0;

    /// Classical free-space KPP speed 2 sqrt(d f'(0)).
    double c_kpp() const { return 2.0 * std::sqrt(d * f0); }

    specfun::HypParams hyp() const { return specfun::HypParams::for_dimension(N); }

    void validate() const {
        if (!(d > 0.0 && D > 0.0 && mu > 0.0 && nu > 0.0 && R > 0.0 && f0 > 0.0))
            throw std::invalid_argument("Params: all parameters must be positive");
        if (N < 1) throw std::invalid_argument("Params: N must be >= 1");
    }
};

/// Admissible alpha range at a fixed beta, clipped to alpha >= 0.
struct AlphaInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// One beta slice of both dispersion regions; an absent interval means
/// the corresponding curve is undefined there for the given c.
struct CurveSample {
    double beta = 0.0;
    std::optional<AlphaInterval> d_interval;  // field (hyperbola / half-disk)
    std::optional<AlphaInterval> D_interval;  // boundary
};

} // namespace kppcyl
