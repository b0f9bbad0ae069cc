#include "kppcyl/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace kppcyl::sim {

double SimConfig::cfl_limit() const {
    const double h2 = std::min(dx() * dx(), dy() * dy());
    return 0.4 * h2 / (2.0 * std::max(p.d, p.D));
}

void SimConfig::validate() const {
    p.validate();
    if (p.N != 1)
        throw std::invalid_argument("SimConfig: the simulator covers N = 1 only");
    if (nx < 8 || ny < 4)
        throw std::invalid_argument("SimConfig: grid too small (need nx >= 8, ny >= 4)");
    if (!(L > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("SimConfig: L and t_end must be positive");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("SimConfig: level must lie in (0,1)");
    if (dt != 0.0) {
        if (!(dt > 0.0))
            throw std::invalid_argument("SimConfig: dt must be positive");
        if (dt > cfl_limit() * (1.0 + 1e-12))
            throw std::invalid_argument("SimConfig: dt violates the CFL bound " +
                                        std::to_string(cfl_limit()));
    }
    if (init == Init::Custom && !v0)
        throw std::invalid_argument("SimConfig: custom init requires v0");
}

SimConfig SimConfig::resolved() const {
    SimConfig c = *this;
    if (c.dt == 0.0) c.dt = cfl_limit();
    return c;
}

SimState make_initial_state(const SimConfig& cfg) {
    cfg.validate();
    SimState s;
    s.nx = cfg.nx;
    s.ny = cfg.ny;
    s.v.assign(static_cast<size_t>(cfg.nx) * cfg.ny, 0.0);
    s.u.assign(cfg.nx, 0.0);
    s.u_til.assign(cfg.nx, 0.0);
    const double dx = cfg.dx();
    if (cfg.init == Init::Bump) {
        // Compact bump in v at x = 0, roads empty. Support stays well
        // inside |x| < L/4.
        const double w = std::min(cfg.L / 8.0, 10.0);
        for (int i = 0; i < cfg.nx; ++i) {
            const double x = -cfg.L + i * dx;
            if (std::abs(x) >= w) continue;
            const double c = std::cos(0.5 * std::numbers::pi * x / w);
            for (int j = 0; j < cfg.ny; ++j) s.at(i, j) = c * c;
        }
    } else {
        const double dy = cfg.dy();
        for (int i = 0; i < cfg.nx; ++i) {
            const double x = -cfg.L + i * dx;
            for (int j = 0; j < cfg.ny; ++j)
                s.at(i, j) = cfg.v0(x, -cfg.p.R + j * dy);
            if (cfg.u0) s.u[i] = cfg.u0(x);
            if (cfg.u_til0) s.u_til[i] = cfg.u_til0(x);
        }
    }
    return s;
}

void step(SimState& s, const SimConfig& cfg) {
    const int nx = s.nx, ny = s.ny;
    const double dt = cfg.dt > 0.0 ? cfg.dt : cfg.cfl_limit();
    const double d = cfg.p.d, D = cfg.p.D, mu = cfg.p.mu, nu = cfg.p.nu;
    const double ix2 = 1.0 / (cfg.dx() * cfg.dx());
    const double iy2 = 1.0 / (cfg.dy() * cfg.dy());
    const double two_dy_over_d = 2.0 * cfg.dy() / d;
    const double rate = cfg.reaction == Reaction::Logistic ? cfg.p.f0 : 0.0;

    static thread_local std::vector<double> vn, un, utn;
    vn.resize(s.v.size());
    un.resize(s.u.size());
    utn.resize(s.u_til.size());

    const double* v = s.v.data();
    double* w = vn.data();
    for (int i = 0; i < nx; ++i) {
        const int il = i > 0 ? i - 1 : 1;          // Neumann mirror in x
        const int ir = i < nx - 1 ? i + 1 : nx - 2;
        const double* c0 = v + static_cast<size_t>(i) * ny;
        const double* cl = v + static_cast<size_t>(il) * ny;
        const double* cr = v + static_cast<size_t>(ir) * ny;
        double* out = w + static_cast<size_t>(i) * ny;
        for (int j = 1; j < ny - 1; ++j) {
            const double vc = c0[j];
            const double lap =
                (cl[j] + cr[j] - 2.0 * vc) * ix2 + (c0[j - 1] + c0[j + 1] - 2.0 * vc) * iy2;
            out[j] = vc + dt * (d * lap + rate * vc * (1.0 - vc));
        }
        // Robin rows via ghost nodes: d (v_ghost - v_inner)/(2 dy) equals
        // the exchange flux, so the ghost folds into the Laplacian.
        {
            const double vc = c0[0];
            const double ghost = c0[1] + two_dy_over_d * (mu * s.u_til[i] - nu * vc);
            const double lap = (cl[0] + cr[0] - 2.0 * vc) * ix2 +
                               (c0[1] + ghost - 2.0 * vc) * iy2;
            out[0] = vc + dt * (d * lap + rate * vc * (1.0 - vc));
        }
        {
            const double vc = c0[ny - 1];
            const double ghost = c0[ny - 2] + two_dy_over_d * (mu * s.u[i] - nu * vc);
            const double lap = (cl[ny - 1] + cr[ny - 1] - 2.0 * vc) * ix2 +
                               (c0[ny - 2] + ghost - 2.0 * vc) * iy2;
            out[ny - 1] = vc + dt * (d * lap + rate * vc * (1.0 - vc));
        }
    }
    for (int i = 0; i < nx; ++i) {
        const int il = i > 0 ? i - 1 : 1;
        const int ir = i < nx - 1 ? i + 1 : nx - 2;
        const double vtop = v[static_cast<size_t>(i) * ny + (ny - 1)];
        const double vbot = v[static_cast<size_t>(i) * ny];
        un[i] = s.u[i] + dt * (D * (s.u[il] + s.u[ir] - 2.0 * s.u[i]) * ix2 +
                               nu * vtop - mu * s.u[i]);
        utn[i] = s.u_til[i] + dt * (D * (s.u_til[il] + s.u_til[ir] - 2.0 * s.u_til[i]) * ix2 +
                                    nu * vbot - mu * s.u_til[i]);
    }
    s.v.swap(vn);
    s.u.swap(un);
    s.u_til.swap(utn);
    s.t += dt;
}

std::optional<double> front_position(const SimState& s, const SimConfig& cfg,
                                     double level) {
    const double dx = cfg.dx();
    double prev_max = 0.0;
    for (int i = s.nx - 1; i >= 0; --i) {
        const double* col = s.v.data() + static_cast<size_t>(i) * s.ny;
        double m = col[0];
        for (int j = 1; j < s.ny; ++j) m = std::max(m, col[j]);
        if (m >= level) {
            const double x = -cfg.L + i * dx;
            if (i == s.nx - 1) return x;
            // interpolate toward the sub-level neighbor on the right
            const double frac = (m - level) / std::max(m - prev_max, 1e-300);
            return x + std::min(frac, 1.0) * dx;
        }
        prev_max = m;
    }
    return std::nullopt;
}

double mass_total(const SimState& s, const SimConfig& cfg) {
    const double dx = cfg.dx(), dy = cfg.dy();
    double mv = 0.0, mu_road = 0.0, mt_road = 0.0;
    for (int i = 0; i < s.nx; ++i) {
        const double wx = (i == 0 || i == s.nx - 1) ? 0.5 : 1.0;
        const double* col = s.v.data() + static_cast<size_t>(i) * s.ny;
        double colsum = 0.5 * (col[0] + col[s.ny - 1]);
        for (int j = 1; j < s.ny - 1; ++j) colsum += col[j];
        mv += wx * colsum;
        mu_road += wx * s.u[i];
        mt_road += wx * s.u_til[i];
    }
    return mv * dx * dy + (mu_road + mt_road) * dx;
}

FrontTrace run(const SimConfig& cfg_in) {
    const SimConfig cfg = cfg_in.resolved();
    cfg.validate();
    SimState s = make_initial_state(cfg);

    const long total_steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt));
    const long record_every = std::max(1L, total_steps / 512);
    const double guard_x = cfg.L - cfg.L / 10.0;  // truncation pollution guard
    const int ic = cfg.nx / 2;

    FrontTrace tr;
    const auto record = [&]() {
        const double vc = s.at(ic, s.ny / 2);
        if (!std::isfinite(vc))
            throw BlowUpError(s.t, "simulate: non-finite value at t = " +
                                       std::to_string(s.t));
        tr.times.push_back(s.t);
        tr.front_x.push_back(front_position(s, cfg, cfg.level));
        tr.mass.push_back(mass_total(s, cfg));
        tr.v_center.push_back(vc);
        tr.u_center.push_back(s.u[ic]);
    };

    record();
    for (long n = 1; n <= total_steps; ++n) {
        step(s, cfg);
        if (n % record_every == 0 || n == total_steps) record();
    }

    // Fit over the second half of the trace, skipping samples within
    // the guard band of the x-boundary.
    tr.fit_t_lo = 0.5 * cfg.t_end;
    tr.fit_t_hi = cfg.t_end;
    double st = 0, sx = 0, stt = 0, stx = 0;
    long n_fit = 0;
    bool any_front = false, hit_guard = false;
    for (size_t k = 0; k < tr.times.size(); ++k) {
        if (!tr.front_x[k]) continue;
        any_front = true;
        if (*tr.front_x[k] >= guard_x) hit_guard = true;
        if (tr.times[k] < tr.fit_t_lo || *tr.front_x[k] >= guard_x) continue;
        const double t = tr.times[k], x = *tr.front_x[k];
        st += t;
        sx += x;
        stt += t * t;
        stx += t * x;
        ++n_fit;
    }
    if (any_front) {
        if (n_fit < 8) {
            if (hit_guard)
                throw DomainTooSmallError(
                    "simulate: front reached the boundary guard before the fit "
                    "window completed; enlarge L or reduce t_end");
        } else {
            const double denom = n_fit * stt - st * st;
            tr.speed_fit = (n_fit * stx - st * sx) / denom;
        }
    }
    return tr;
}

} // namespace kppcyl::sim
