#include "winfree/config.hpp"
#include "winfree/experiments.hpp"
#include "winfree/integrate.hpp"

#include <benchmark/benchmark.h>

using namespace winfree;

namespace {

SystemParams params_for(std::size_t n) {
    auto cfg = figure_preset("fig1");
    cfg.params.n = n;
    return cfg.system();
}

State state_for(std::size_t n) {
    auto cfg = figure_preset("fig1");
    cfg.params.n = n;
    return cfg.initial_state();
}

void bm_drift(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const SystemParams p = params_for(n);
    const State s = state_for(n);
    for (auto _ : st) {
        benchmark::DoNotOptimize(drift_second_order(p, s));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(bm_drift)->Arg(21)->Arg(256)->Arg(4096);

void bm_euler_step(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const SystemParams p = params_for(n);
    State s = state_for(n);
    for (auto _ : st) {
        s = euler_step(p, s, 1e-3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_euler_step)->Arg(21)->Arg(256);

void bm_rk4_step(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const SystemParams p = params_for(n);
    State s = state_for(n);
    for (auto _ : st) {
        s = rk4_step(p, s, 1e-3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_rk4_step)->Arg(21)->Arg(256);

void bm_fig1_trajectory(benchmark::State& st) {
    const auto cfg = figure_preset("fig1");
    const SystemParams p = cfg.system();
    const State s0 = cfg.initial_state();
    for (auto _ : st) {
        benchmark::DoNotOptimize(simulate_deterministic(p, s0, cfg.grid));
    }
}
BENCHMARK(bm_fig1_trajectory)->Unit(benchmark::kMillisecond);

void bm_fig3_montecarlo(benchmark::State& st) {
    const auto cfg = figure_preset("fig3");
    MonteCarloOptions opt;
    opt.n_paths = static_cast<std::size_t>(st.range(0));
    opt.master_seed = 1;
    opt.threshold = cfg.monte_carlo->threshold;
    opt.threads = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            monte_carlo_locking(cfg.system(), cfg.initial_state(), cfg.grid, *cfg.noise, opt));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(bm_fig3_montecarlo)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
