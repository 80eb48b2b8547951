#include "numrad/instances.hpp"
#include "numrad/radius.hpp"
#include "numrad/suite.hpp"

#include <benchmark/benchmark.h>

using namespace numrad;

namespace {

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_Radius(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix t = gen_instance({n, 7, Family::GeneralComplex, 0.5, {}}).matrix;
    RadiusOptions options;
    options.execution = mode(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius_certified(t, 1e-9, options));
    }
    label(state);
}

void BM_RadiusUncapped(benchmark::State& state) {
    // no a-priori caps: the sweep has to close the gap on its own
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix t = gen_instance({n, 8, Family::GeneralComplex, 0.5, {}}).matrix;
    RadiusOptions options;
    options.execution = mode(state);
    options.a_priori_caps = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius_certified(t, 1e-9, options));
    }
    label(state);
}

void BM_Suite(benchmark::State& state) {
    SuiteConfig config;
    config.trials = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(config, mode(state)));
    }
    state.SetItemsProcessed(state.iterations() * config.trials * static_cast<std::int64_t>(config.checks.size()));
    label(state);
}

}  // namespace

BENCHMARK(BM_Radius)->ArgsProduct({{4, 8, 16}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RadiusUncapped)->ArgsProduct({{4, 8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite)->ArgsProduct({{10}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
