#include "kppcyl/speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "scalar_solvers.hpp"

namespace kppcyl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 512;
constexpr double kBetaTol = 1e-12;
// c-bisection is run tighter than the 1e-8 contract so the tangency
// point stays well localized near mixed-type parameters.
constexpr double kRelTolC = 1e-12;
// Upper grid cut just below the chi1 pole.
constexpr double kBarCut = 1.0 - 1e-9;

// Signed gap between the two region slices at fixed beta; <= 0 means
// the slices intersect.
double gap_between(const std::optional<AlphaInterval>& a,
                   const std::optional<AlphaInterval>& b) {
    if (!a || !b) return kInf;
    return std::max(a->lo, b->lo) - std::min(a->hi, b->hi);
}

struct Scan {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> grid_gap;  // kGridPoints + 1 values, empty if no domain
    double best_beta = 0.0;
    double best_gap = kInf;
};

// Coarse grid minimization of gapfn over [lo, hi] followed by two
// golden-section refinements around the grid minimizer.
template <class F>
Scan scan_gap(F&& gapfn, double lo, double hi) {
    Scan s;
    s.lo = lo;
    s.hi = hi;
    if (!(hi > lo)) return s;
    const double step = (hi - lo) / kGridPoints;
    s.grid_gap.resize(kGridPoints + 1);
    for (int i = 0; i <= kGridPoints; ++i) {
        const double b = (i == kGridPoints) ? hi : lo + i * step;
        s.grid_gap[i] = gapfn(b);
        if (s.grid_gap[i] < s.best_gap) {
            s.best_gap = s.grid_gap[i];
            s.best_beta = b;
        }
    }
    if (!std::isfinite(s.best_gap)) return s;
    const double a = std::max(lo, s.best_beta - step);
    const double b = std::min(hi, s.best_beta + step);
    auto [x1, g1] = detail::golden_min(gapfn, a, b, kBetaTol);
    if (g1 < s.best_gap) {
        s.best_gap = g1;
        s.best_beta = x1;
    }
    const double w = std::max((b - a) / 64.0, 64.0 * kBetaTol);
    auto [x2, g2] = detail::golden_min(gapfn, std::max(lo, s.best_beta - w),
                                       std::min(hi, s.best_beta + w), kBetaTol);
    if (g2 < s.best_gap) {
        s.best_gap = g2;
        s.best_beta = x2;
    }
    return s;
}

// Common beta domain of the two regions at speed c.
void full_domain(const Dispersion& cv, double c, double& lo, double& hi) {
    lo = (c >= cv.params().c_kpp()) ? -cv.rho(c) : cv.beta_hat(c);
    hi = std::min(cv.beta_tilde(c), cv.beta_bar() * kBarCut);
}

Scan full_scan(const Dispersion& cv, double c) {
    double lo, hi;
    full_domain(cv, c, lo, hi);
    return scan_gap(
        [&](double b) {
            return gap_between(cv.alpha_d_interval(c, b), cv.alpha_D_interval(c, b));
        },
        lo, hi);
}

// Doubling bracket + bisection on a monotone overlap predicate.
// Returns the overlap-side end of the terminal bracket.
template <class Overlap>
double bisect_speed(Overlap&& overlap, double c_lo, double c_hi, const char* what) {
    if (overlap(c_lo))
        throw SolverError(std::string(what) + ": overlap at the lower c seed");
    int doublings = 0;
    while (!overlap(c_hi)) {
        c_lo = c_hi;
        c_hi *= 2.0;
        if (++doublings > 40)
            throw SolverError(std::string(what) + ": no overlap up to the c cap");
    }
    while (c_hi - c_lo > kRelTolC * c_hi) {
        const double mid = 0.5 * (c_lo + c_hi);
        if (overlap(mid))
            c_hi = mid;
        else
            c_lo = mid;
    }
    return c_hi;
}

// Number of connected grid clusters with gap <= 0, merging runs
// separated by at most two cells.
int zero_cluster_count(const std::vector<double>& g) {
    int clusters = 0;
    int since_last = 1000;
    for (double v : g) {
        if (v <= 0.0) {
            if (since_last > 2) ++clusters;
            since_last = 0;
        } else {
            ++since_last;
        }
    }
    return clusters;
}

} // namespace

const char* to_string(TangencyType t) {
    switch (t) {
        case TangencyType::Type1: return "type1";
        case TangencyType::Type2: return "type2";
        default: return "mixed";
    }
}

double region_gap(const Dispersion& cv, double c, double beta) {
    return gap_between(cv.alpha_d_interval(c, beta), cv.alpha_D_interval(c, beta));
}

bool regions_overlap(double c, const Dispersion& cv) {
    return full_scan(cv, c).best_gap <= 0.0;
}

bool regions_overlap(double c, const Params& p) {
    return regions_overlap(c, Dispersion(p));
}

TangencyResult solve_cstar(const Params& p) {
    p.validate();
    const Dispersion cv(p);
    const double ck = p.c_kpp();
    const auto overlap = [&](double c) { return regions_overlap(c, cv); };
    const double c_star = bisect_speed(overlap, 1e-6 * ck, ck, "solve_cstar");

    const Scan s = full_scan(cv, c_star);
    if (zero_cluster_count(s.grid_gap) > 1)
        throw SolverError("solve_cstar: tangency point is not unique");

    const auto gapfn = [&](double b) { return region_gap(cv, c_star, b); };
    // The tangency estimate is the center of the contact set {gap <= 0};
    // for a flat (mixed-type) gap this is far better conditioned than
    // the bare minimizer.
    double beta_star = s.best_beta;
    if (s.best_gap <= 0.0) {
        double h = std::max(1e-9, (s.hi - s.lo) * 1e-6);
        double bl = s.best_beta, br = s.best_beta;
        while (bl - h > s.lo && gapfn(bl - h) <= 0.0) h *= 2.0;
        bl = detail::bisect_root(gapfn, std::max(s.lo, bl - h), bl, kBetaTol);
        h = std::max(1e-9, (s.hi - s.lo) * 1e-6);
        while (br + h < s.hi && gapfn(br + h) <= 0.0) h *= 2.0;
        br = detail::bisect_root(gapfn, br, std::min(s.hi, br + h), kBetaTol);
        const double mid = 0.5 * (bl + br);
        if (gapfn(mid) <= 0.0) beta_star = mid;
    }

    const auto di = cv.alpha_d_interval(c_star, beta_star);
    const auto Di = cv.alpha_D_interval(c_star, beta_star);
    const double alpha_lo = std::max(di->lo, Di->lo);
    const double alpha_hi = std::min(di->hi, Di->hi);
    const double alpha_star = 0.5 * (alpha_lo + alpha_hi);
    const double gamma_star = cv.gamma_coef(beta_star);

    const double tie = 1e-6 * cv.beta_bar();
    TangencyType type = TangencyType::Mixed;
    if (beta_star > tie)
        type = TangencyType::Type1;
    else if (beta_star < -tie)
        type = TangencyType::Type2;

    const double overlap_tol = std::max(std::abs(alpha_lo - alpha_hi), 1e-12);
    return {c_star, beta_star, alpha_star, gamma_star, type, overlap_tol};
}

TangencyType classify_type(const Params& p) {
    p.validate();
    const double lhs = 2.0 * p.d / p.D;
    const double rhs = 1.0 - p.N * p.nu / (p.mu * p.R);
    if (std::abs(lhs - rhs) <= 1e-12) return TangencyType::Mixed;
    return lhs > rhs ? TangencyType::Type1 : TangencyType::Type2;
}

RMax r_max(const Params& p) {
    p.validate();
    if (!(p.D > 2.0 * p.d))
        throw std::domain_error("r_max: requires D > 2d (c*(R) is increasing otherwise)");
    const double rm = p.N * p.D * p.nu / ((p.D - 2.0 * p.d) * p.mu);
    const double cm = p.D * p.c_kpp() / std::sqrt(4.0 * p.d * (p.D - p.d));
    return {rm, cm};
}

double limit_c0(const Params& p) {
    p.validate();
    const Dispersion cv(p);
    const double ck = p.c_kpp();
    const double bar_cut = cv.beta_bar() * kBarCut;
    const auto overlap = [&](double c) {
        const double lo = (c >= ck) ? 0.0 : cv.beta_hat(c);
        const auto gapfn = [&](double b) {
            const auto di = cv.alpha_d_interval(c, b);
            if (!di) return kInf;
            return cv.chi1(b) / c - di->hi;
        };
        return scan_gap(gapfn, lo, bar_cut).best_gap <= 0.0;
    };
    return bisect_speed(overlap, 1e-6 * ck, ck, "limit_c0");
}

double limit_ctilde(const Params& p) {
    p.validate();
    Params q = p;
    q.D = 1.0;  // the rescaled boundary region has unit diffusivity
    const Dispersion cv(q);
    const double bar_cut = cv.beta_bar() * kBarCut;
    const auto overlap = [&](double c) {
        // Below beta_lo the parabola exceeds any possible upper endpoint.
        const double hi_max = 0.5 * (c + std::sqrt(c * c + 4.0 * p.mu));
        const double beta_lo =
            -std::sqrt(std::max(c * hi_max - p.f0, 0.0) / p.d) - 1.0;
        // Above sqrt(f0/d) the beta >= 0 branch leaves the upper half-plane.
        const double beta_hi = std::min(
            {cv.beta_tilde(c), bar_cut, std::sqrt(p.f0 / p.d)});
        const auto gapfn = [&](double b) {
            const auto iv = cv.alpha_D_interval(c, b);
            if (!iv) return kInf;
            // field-equation curve of the rescaled system: the radial
            // eigenvalue enters with opposite sign on the two sides
            const double par = (p.f0 - std::copysign(p.d * b * b, b)) / c;
            if (par < 0.0) return kInf;
            return std::max(iv->lo - par, par - iv->hi);
        };
        return scan_gap(gapfn, beta_lo, beta_hi).best_gap <= 0.0;
    };
    const double seed = std::sqrt(p.f0);
    return bisect_speed(overlap, 1e-6 * seed, seed, "limit_ctilde");
}

double limit_cinf(const Params& p) {
    p.validate();
    const double ck = p.c_kpp();
    if (p.D <= 2.0 * p.d) return ck;
    const double twod = 2.0 * p.d;
    const auto overlap = [&](double c) {
        const double rho = std::sqrt(c * c - ck * ck) / twod;
        const auto gapfn = [&](double b) {
            const double chi_inf = p.mu * p.d * b / (p.nu - p.d * b);
            const double a_inf =
                (c + std::sqrt(c * c - 4.0 * p.D * chi_inf)) / (2.0 * p.D);
            const double chord_lo = c / twod - std::sqrt(std::max(rho * rho - b * b, 0.0));
            return chord_lo - a_inf;
        };
        return scan_gap(gapfn, -rho, 0.0).best_gap <= 0.0;
    };
    return bisect_speed(overlap, ck * (1.0 + 1e-9), 2.0 * ck, "limit_cinf");
}

LimitSpeeds limit_speeds(const Params& p) {
    return {limit_c0(p), limit_ctilde(p), limit_cinf(p)};
}

} // namespace kppcyl
