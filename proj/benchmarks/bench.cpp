#include <benchmark/benchmark.h>

#include "kppcyl/dispersion.hpp"
#include "kppcyl/simulate.hpp"
#include "kppcyl/specfun.hpp"
#include "kppcyl/speed.hpp"

using namespace kppcyl;

namespace {

Params base(double D, double R) { return Params{1.0, D, 1.0, 1.0, R, 1, 1.0}; }

void BM_Hyp0f1(benchmark::State& state) {
    const double z = -state.range(0) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(specfun::hyp0f1(1.5, z));
}
BENCHMARK(BM_Hyp0f1)->Arg(1)->Arg(100)->Arg(2500);

void BM_Chi1(benchmark::State& state) {
    const Dispersion cv(base(4.0, 2.0));
    const double b = 0.5 * cv.beta_bar();
    for (auto _ : state) benchmark::DoNotOptimize(cv.chi1(b));
}
BENCHMARK(BM_Chi1);

void BM_RegionsOverlap(benchmark::State& state) {
    const Dispersion cv(base(4.0, 2.0));
    for (auto _ : state) benchmark::DoNotOptimize(regions_overlap(2.2, cv));
}
BENCHMARK(BM_RegionsOverlap);

void BM_SolveCstar(benchmark::State& state) {
    const Params p = base(4.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_cstar(p));
}
BENCHMARK(BM_SolveCstar)->Arg(2)->Arg(10);

void BM_SimStep(benchmark::State& state) {
    sim::SimConfig cfg;
    cfg.p = base(1.0, 2.0);
    cfg.L = 60.0;
    cfg.nx = static_cast<int>(state.range(0));
    cfg.ny = 40;
    const sim::SimConfig rc = cfg.resolved();
    sim::SimState s = sim::make_initial_state(rc);
    for (auto _ : state) sim::step(s, rc);
    state.SetItemsProcessed(state.iterations() * cfg.nx * cfg.ny);
}
BENCHMARK(BM_SimStep)->Arg(600)->Arg(2400);

} // namespace

BENCHMARK_MAIN();
