#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kppcyl/params.hpp"

namespace kppcyl::sim {

enum class Reaction { Logistic, Zero };
enum class Init { Bump, Custom };

/// Discretization of the N=1 strip with two roads: v on
/// [-L,L] x [-R,R], u on the top road (y = R), u_til on the bottom.
/// Explicit Euler, 5-point Laplacian, ghost-node Robin coupling at
/// y = +-R, homogeneous Neumann at x = +-L.
struct SimConfig {
    Params p;             // N must be 1
    double L = 120.0;     // half-length of the truncated x-domain
    int nx = 2400;
    int ny = 40;
    double dt = 0.0;      // 0 selects the CFL bound
    double t_end = 60.0;
    Reaction reaction = Reaction::Logistic;
    double level = 0.5;   // front-tracking level
    Init init = Init::Bump;

    // Custom initial data, used when init == Custom.
    std::function<double(double x, double y)> v0;
    std::function<double(double x)> u0;
    std::function<double(double x)> u_til0;

    double dx() const { return 2.0 * L / (nx - 1); }
    double dy() const { return 2.0 * p.R / (ny - 1); }

    /// Stability bound 0.4 min(dx^2, dy^2) / (2 max(d, D)).
    double cfl_limit() const;

    /// Throws std::invalid_argument on bad dimensions, N != 1, a dt
    /// above the CFL bound, or a level outside (0,1).
    void validate() const;

    /// Copy with dt resolved (the CFL bound when dt == 0).
    SimConfig resolved() const;
};

struct SimState {
    int nx = 0, ny = 0;
    std::vector<double> v;      // nx*ny, row-major in x (index ix*ny + iy)
    std::vector<double> u;      // top road
    std::vector<double> u_til;  // bottom road
    double t = 0.0;

    double& at(int ix, int iy) { return v[static_cast<size_t>(ix) * ny + iy]; }
    double at(int ix, int iy) const { return v[static_cast<size_t>(ix) * ny + iy]; }
};

/// Front positions over time plus the least-squares speed over the fit
/// window (second half of the run, boundary-polluted samples excluded).
/// The mass / center columns back the CLI trace output.
struct FrontTrace {
    std::vector<double> times;
    std::vector<std::optional<double>> front_x;
    std::vector<double> mass;
    std::vector<double> v_center;
    std::vector<double> u_center;
    std::optional<double> speed_fit;  // absent when no front formed
    double fit_t_lo = 0.0;
    double fit_t_hi = 0.0;
};

class BlowUpError : public std::runtime_error {
public:
    BlowUpError(double when, const std::string& what)
        : std::runtime_error(what), t(when) {}
    double t;
};

class DomainTooSmallError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimState make_initial_state(const SimConfig& cfg);

/// One explicit Euler step (in place).
void step(SimState& s, const SimConfig& cfg);

/// Largest x where max_y v >= level, linearly interpolated between
/// columns; absent if no column qualifies.
std::optional<double> front_position(const SimState& s, const SimConfig& cfg,
                                     double level);

/// Trapezoidal total mass: integral of v over the strip plus u and
/// u_til over the roads.
double mass_total(const SimState& s, const SimConfig& cfg);

/// Integrate to t_end, recording the trace at a fixed cadence and
/// fitting the front speed. Throws DomainTooSmallError when the front
/// reaches the boundary guard band before enough fit samples exist, and
/// BlowUpError on non-finite values.
FrontTrace run(const SimConfig& cfg);

} // namespace kppcyl::sim
