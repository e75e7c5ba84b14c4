#include "activeflux/harness/commands.hpp"
#include "activeflux/harness/presets.hpp"
#include "activeflux/reconstruction.hpp"
#include "activeflux/solver.hpp"

#include <benchmark/benchmark.h>

#include <array>
#include <random>

using namespace af;
using namespace af::harness;

namespace {

void BM_ReconstructCell(benchmark::State& st) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<std::array<double, 3>> triples(1024);
    for (auto& t : triples)
        t = {U(rng), U(rng), U(rng)};
    LimiterMode lim;
    lim.kind = LimiterMode::PowerLaw;
    std::size_t k = 0;
    for (auto _ : st) {
        const auto& t = triples[k++ & 1023];
        const CellReconstruction1D c = reconstruct_cell(t[0], t[1], t[2], lim);
        benchmark::DoNotOptimize(c(0.3));
    }
}
BENCHMARK(BM_ReconstructCell);

// One time step of a preset; the argument is the number of cells.
void step_preset(benchmark::State& st, const char* name) {
    RunConfig c = find_preset(name);
    c.dx = (c.x_max - c.x_min + 2.0 * c.domain_padding) / double(st.range(0));
    const Problem1D pr = build_problem_1d(c);
    const State1D s = init_state(pr.grid, *pr.model, pr.ic, pr.solver.bc);
    const double dt = compute_dt(s, pr.grid, *pr.model, pr.solver.cfl, pr.solver.t_end);
    for (auto _ : st)
        benchmark::DoNotOptimize(step(s, pr.grid, *pr.model, pr.solver, dt));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_StepBurgers(benchmark::State& st) { step_preset(st, "burgers-gauss"); }
void BM_StepPSystemRK2(benchmark::State& st) { step_preset(st, "psystem-gauss"); }
void BM_StepEulerProjector(benchmark::State& st) { step_preset(st, "euler-gauss"); }
BENCHMARK(BM_StepBurgers)->Arg(200)->Arg(800);
BENCHMARK(BM_StepPSystemRK2)->Arg(256)->Arg(1024);
BENCHMARK(BM_StepEulerProjector)->Arg(256)->Arg(1024);

void BM_Step2DQuadrant(benchmark::State& st) {
    RunConfig c = find_preset("burgers2d-quadrant");
    c.dx = 1.0 / 50.0;
    const Problem2D pr = build_problem_2d(c);
    const State2D s = init_state(pr.grid, pr.ic, pr.solver.bc);
    const double dt = compute_dt(s, pr.grid, *pr.law, pr.solver.cfl, pr.solver.t_end, pr.solver.bc);
    for (auto _ : st)
        benchmark::DoNotOptimize(step(s, pr.grid, *pr.law, pr.solver, dt));
    st.SetItemsProcessed(st.iterations() * pr.grid.nx * pr.grid.ny);
}
BENCHMARK(BM_Step2DQuadrant);

} // namespace

BENCHMARK_MAIN();
