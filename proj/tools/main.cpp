// kppcyl: spreading-speed computations for a KPP field in a cylinder
// with diffusive boundary, plus a strip-with-two-roads simulator.
//
// Subcommands: speed, sweep, limits, curves, simulate. All data output
// is CSV on stdout; human-readable summaries go to stderr.
// Exit codes: 0 success, 1 runtime/solver failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kppcyl/csv.hpp"
#include "kppcyl/simulate.hpp"
#include "kppcyl/speed.hpp"

using namespace kppcyl;

namespace {

struct ParamFlags {
    Params p;
    void attach(CLI::App* cmd, bool require_D = true, bool require_R = true) {
        cmd->add_option("--d", p.d, "field diffusivity")->capture_default_str();
        auto* oD = cmd->add_option("--D", p.D, "boundary diffusivity");
        cmd->add_option("--mu", p.mu, "leave-boundary rate")->capture_default_str();
        cmd->add_option("--nu", p.nu, "join-boundary rate")->capture_default_str();
        auto* oR = cmd->add_option("--R", p.R, "cylinder radius");
        cmd->add_option("--N", p.N, "boundary dimension count")->capture_default_str();
        cmd->add_option("--f0", p.f0, "linearized reaction rate f'(0)")
            ->capture_default_str();
        if (require_D) oD->required();
        if (require_R) oR->required();
    }
};

std::vector<double> parse_grid(const std::string& values, const std::string& range) {
    std::vector<double> out;
    if (!values.empty()) {
        std::stringstream ss(values);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    } else if (!range.empty()) {
        std::stringstream ss(range);
        std::string tok;
        std::vector<std::string> parts;
        while (std::getline(ss, tok, ':')) parts.push_back(tok);
        if (parts.size() < 3)
            throw std::invalid_argument("range spec must be lo:hi:n[:log|lin]");
        const double lo = std::stod(parts[0]);
        const double hi = std::stod(parts[1]);
        const int n = std::stoi(parts[2]);
        const bool logspace = parts.size() > 3 && parts[3] == "log";
        if (n < 1 || !(hi > lo))
            throw std::invalid_argument("range spec must have hi > lo and n >= 1");
        if (logspace && !(lo > 0.0))
            throw std::invalid_argument("log range requires lo > 0");
        for (int i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            out.push_back(logspace ? lo * std::pow(hi / lo, t)
                                   : lo + t * (hi - lo));
        }
    } else {
        throw std::invalid_argument("one of --values or --range is required");
    }
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw std::invalid_argument("grid values must be strictly increasing");
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

std::vector<double> parse_sweep_values(const std::string& values,
                                       const std::string& range) {
    std::vector<double> out = parse_grid(values, range);
    for (double v : out)
        if (!(v > 0.0))
            throw std::invalid_argument("sweep values must be positive");
    return out;
}

int cmd_speed(const Params& p) {
    p.validate();
    const TangencyResult r = solve_cstar(p);
    std::cout << csv::speed_header() << '\n'
              << csv::speed_row(p, r) << '\n';
    std::cerr << "c_star = " << csv::field(r.c_star) << "  (beta_star = "
              << csv::field(r.beta_star) << ", alpha_star = "
              << csv::field(r.alpha_star) << ", type " << to_string(r.type)
              << ")\n";
    if (p.D > 2.0 * p.d) {
        const RMax m = r_max(p);
        std::cerr << "R_M = " << csv::field(m.R_M)
                  << "  c_M = " << csv::field(m.c_M) << '\n';
    }
    return 0;
}

int cmd_sweep(const Params& base, const std::string& axis,
              const std::vector<double>& values) {
    base.validate();
    std::cout << "kind,value,c_star,beta_star,type,status\n";
    bool any_failed = false;
    for (double v : values) {
        Params p = base;
        if (axis == "D")
            p.D = v;
        else
            p.R = v;
        try {
            const TangencyResult r = solve_cstar(p);
            std::cout << "point," << csv::field(v) << ',' << csv::field(r.c_star)
                      << ',' << csv::field(r.beta_star) << ',' << to_string(r.type)
                      << ",ok\n";
        } catch (const std::exception& e) {
            any_failed = true;
            std::cout << "point," << csv::field(v) << ",,,,failed\n";
            std::cerr << "sweep point " << axis << " = " << v << " failed: "
                      << e.what() << '\n';
        }
    }
    // limit footers, usable as plot overlays
    if (axis == "D") {
        std::cout << "limit,,," << csv::field(limit_c0(base)) << ",c0,ok\n";
        std::cout << "limit,,," << csv::field(limit_ctilde(base)) << ",c_tilde2,ok\n";
    } else {
        std::cout << "limit,,," << csv::field(limit_cinf(base)) << ",c_inf,ok\n";
        if (base.D > 2.0 * base.d) {
            const RMax m = r_max(base);
            std::cout << "limit,,," << csv::field(m.R_M) << ",R_M,ok\n";
            std::cout << "limit,,," << csv::field(m.c_M) << ",c_M,ok\n";
        }
    }
    return any_failed ? 1 : 0;
}

int cmd_limits(const Params& p) {
    p.validate();
    const LimitSpeeds ls = limit_speeds(p);
    if (p.D > 2.0 * p.d) {
        const RMax m = r_max(p);
        std::cout << "c0,c_tilde2,c_inf,R_M,c_M\n"
                  << csv::field(ls.c0) << ',' << csv::field(ls.c_tilde2) << ','
                  << csv::field(ls.c_inf) << ',' << csv::field(m.R_M) << ','
                  << csv::field(m.c_M) << '\n';
    } else {
        std::cout << "c0,c_tilde2,c_inf\n"
                  << csv::field(ls.c0) << ',' << csv::field(ls.c_tilde2) << ','
                  << csv::field(ls.c_inf) << '\n';
    }
    return 0;
}

int cmd_curves(const Params& p, double c, const std::string& beta_range) {
    p.validate();
    if (!(c > 0.0)) throw std::invalid_argument("curves: --c must be positive");
    const Dispersion cv(p);
    std::vector<double> grid;
    if (!beta_range.empty()) {
        grid = parse_grid("", beta_range);
    } else {
        const double lo = (c >= p.c_kpp()) ? -1.05 * cv.rho(c) : 0.0;
        const double hi =
            std::min(1.05 * cv.beta_tilde(c), cv.beta_bar() * (1.0 - 1e-9));
        const int n = 201;
        for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
    }
    std::cout << csv::curves_header() << '\n';
    for (const CurveSample& s : cv.sample_curves(c, grid))
        std::cout << csv::curves_row(s) << '\n';
    return 0;
}

int cmd_simulate(sim::SimConfig cfg) {
    cfg.p.N = 1;
    cfg.validate();
    const sim::FrontTrace tr = sim::run(cfg);
    std::cout << "t,front_x,mass,v_center,u_center\n";
    for (size_t k = 0; k < tr.times.size(); ++k) {
        std::cout << csv::field(tr.times[k]) << ',';
        if (tr.front_x[k]) std::cout << csv::field(*tr.front_x[k]);
        std::cout << ',' << csv::field(tr.mass[k]) << ','
                  << csv::field(tr.v_center[k]) << ','
                  << csv::field(tr.u_center[k]) << '\n';
    }
    if (cfg.reaction == sim::Reaction::Zero) {
        const double drift =
            std::abs(tr.mass.back() - tr.mass.front()) / tr.mass.front();
        std::cerr << "mass_drift = " << csv::field(drift) << " (relative)\n";
        return 0;
    }
    if (!tr.speed_fit) {
        std::cerr << "no front formed; nothing to fit\n";
        return 0;
    }
    const TangencyResult r = solve_cstar(cfg.p);
    const double dev = std::abs(*tr.speed_fit - r.c_star) / r.c_star;
    std::cerr << "speed_fit = " << csv::field(*tr.speed_fit)
              << "  c_star = " << csv::field(r.c_star)
              << "  deviation = " << csv::field(100.0 * dev) << "%\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"KPP spreading speed in a cylinder with boundary diffusion"};
    app.require_subcommand(1);
    // key=value file with one [section] per subcommand, e.g. [simulate]
    app.set_config("--config", "", "read options from a key=value file");

    auto* sp = app.add_subcommand("speed", "compute c* for one parameter set");
    ParamFlags sp_p;
    sp_p.attach(sp);

    auto* sw = app.add_subcommand("sweep", "sweep c* along a D or R axis");
    ParamFlags sw_p;
    std::string axis, sw_values, sw_range;
    sw->add_option("--axis", axis, "sweep axis: D or R")
        ->required()
        ->check(CLI::IsMember({"D", "R"}));
    sw->add_option("--values", sw_values, "comma-separated axis values");
    sw->add_option("--range", sw_range, "axis range lo:hi:n[:log|lin]");
    sw_p.attach(sw, /*require_D=*/false, /*require_R=*/false);

    auto* li = app.add_subcommand("limits", "limit speeds c0, c_tilde2, c_inf");
    ParamFlags li_p;
    li_p.attach(li);

    auto* cu = app.add_subcommand("curves", "dump dispersion-region slices");
    ParamFlags cu_p;
    double cu_c = 0.0;
    std::string cu_range;
    cu->add_option("--c", cu_c, "wave speed")->required();
    cu->add_option("--beta-range", cu_range, "beta grid lo:hi:n");
    cu_p.attach(cu);

    auto* si = app.add_subcommand("simulate", "finite-difference strip run");
    ParamFlags si_p;
    sim::SimConfig cfg;
    std::string reaction = "logistic";
    si->add_option("--L", cfg.L, "half-length of the x-domain")->capture_default_str();
    si->add_option("--nx", cfg.nx, "x grid points")->capture_default_str();
    si->add_option("--ny", cfg.ny, "y grid points")->capture_default_str();
    si->add_option("--dt", cfg.dt, "time step (default: CFL bound)");
    si->add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
    si->add_option("--reaction", reaction, "logistic or zero")
        ->check(CLI::IsMember({"logistic", "zero"}))
        ->capture_default_str();
    si->add_option("--level", cfg.level, "front-tracking level")->capture_default_str();
    si_p.attach(si, /*require_D=*/false, /*require_R=*/false);
    si_p.p.R = 2.0;

    try {
        app.parse(argc, argv);
        if (sp->parsed()) return cmd_speed(sp_p.p);
        if (sw->parsed()) {
            const Params& b = sw_p.p;
            if (axis == "D" && sw->count("--R") == 0)
                throw std::invalid_argument("sweep --axis D requires --R");
            if (axis == "R" && sw->count("--D") == 0)
                throw std::invalid_argument("sweep --axis R requires --D");
            return cmd_sweep(b, axis, parse_sweep_values(sw_values, sw_range));
        }
        if (li->parsed()) return cmd_limits(li_p.p);
        if (cu->parsed()) return cmd_curves(cu_p.p, cu_c, cu_range);
        if (si->parsed()) {
            cfg.p = si_p.p;
            cfg.reaction = reaction == "zero" ? sim::Reaction::Zero
                                              : sim::Reaction::Logistic;
            return cmd_simulate(cfg);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
