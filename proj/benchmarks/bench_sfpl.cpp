// Microbenchmarks for the hot paths: the dense solver, a full conditional
// CDF solve, gradient slices, CDF inversion and complete sampler sweeps.

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <vector>

#include "sfpl/sfpl.hpp"

using namespace sfpl;

namespace {

// Diagonally dominant random system, representative of the equilibrated
// collocation matrices.
void bm_solve_dense(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(7);
    Matrix a(n, n);
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            a(i, j) = rng.uniform(-1.0, 1.0);
            row += std::fabs(a(i, j));
        }
        a(i, i) += row;
        b[i] = rng.uniform(-1.0, 1.0);
    }
    for (auto _ : state) {
        auto x = solve_dense(a, b);
        benchmark::DoNotOptimize(x);
    }
}

void bm_conditional_solve(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    FunctionCost cost(
        1, [](const std::vector<double>& x) { return 0.5 * x[0] * x[0]; },
        [](const std::vector<double>& x, std::size_t) { return x[0]; });
    SearchSpace space({-1.0}, {1.0});
    SfpConfig config;
    config.D = 1.0;
    config.L = L;
    SamplerState st({0.0}, 0);
    for (auto _ : state) {
        auto cdf = solve_conditional_cdf(cost, st, 0, config, space);
        benchmark::DoNotOptimize(cdf);
    }
}

void bm_xor_gradient_slice(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    XorCost cost;
    const SearchSpace space = SearchSpace::uniform_box(9, -10.0, 10.0);
    SfpConfig config;
    config.D = 0.01;
    config.L = L;
    const auto tables = make_collocation_tables(space, config);
    SamplerState st = SamplerState::random_start(space, 3);
    std::vector<double> slice;
    for (auto _ : state) {
        gradient_slice(cost, st, 0, *tables[0], slice);
        benchmark::DoNotOptimize(slice);
    }
}

void bm_invert_cdf(benchmark::State& state) {
    FunctionCost cost(
        1, [](const std::vector<double>& x) { return 0.5 * x[0] * x[0]; },
        [](const std::vector<double>& x, std::size_t) { return x[0]; });
    SearchSpace space({-1.0}, {1.0});
    SfpConfig config;
    config.D = 1.0;
    config.L = 30;
    SamplerState st({0.0}, 0);
    const auto cdf = solve_conditional_cdf(cost, st, 0, config, space);
    double u = 0.0;
    for (auto _ : state) {
        u += 0.618033988749895;
        u -= std::floor(u);
        benchmark::DoNotOptimize(invert_cdf(cdf, u, 1024));
    }
}

void bm_michalewicz_sweep(benchmark::State& state) {
    MichalewiczCost cost(10);
    const SearchSpace space = michalewicz_space();
    SfpConfig config;
    config.D = 0.4;
    config.L = static_cast<int>(state.range(0));
    const auto tables = make_collocation_tables(space, config);
    MarginalAccumulator acc(space, config.L);
    SamplerState st = SamplerState::random_start(space, 1);
    for (auto _ : state) {
        sfp_sweep(st, cost, config, space, &acc, tables);
        benchmark::DoNotOptimize(st.x);
    }
}

void bm_xor_sweep(benchmark::State& state) {
    XorCost cost;
    const SearchSpace space = SearchSpace::uniform_box(9, -10.0, 10.0);
    SfpConfig config;
    config.D = 0.01;
    config.L = static_cast<int>(state.range(0));
    const auto tables = make_collocation_tables(space, config);
    MarginalAccumulator acc(space, config.L);
    SamplerState st = SamplerState::random_start(space, 1);
    for (auto _ : state) {
        sfp_sweep(st, cost, config, space, &acc, tables);
        benchmark::DoNotOptimize(st.x);
    }
}

BENCHMARK(bm_solve_dense)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_conditional_solve)->Arg(30)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_xor_gradient_slice)->Arg(200)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_invert_cdf)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_michalewicz_sweep)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_xor_sweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
