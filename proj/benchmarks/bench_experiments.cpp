#include "jband/experiment.hpp"
#include "jband/multipartite.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

void BM_NamedExperiment(benchmark::State& state, const std::string& name) {
    const jband::ExperimentSpec spec = jband::named_experiment(name);
    for (auto _ : state) benchmark::DoNotOptimize(jband::run_experiment(spec));
}
BENCHMARK_CAPTURE(BM_NamedExperiment, fig1a, std::string("fig1a"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NamedExperiment, fig1b, std::string("fig1b"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NamedExperiment, fig2c, std::string("fig2c"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NamedExperiment, fig4, std::string("fig4"))->Unit(benchmark::kMillisecond);

void BM_GeometricEntropy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jband::geometric_entropy({n, n / 2}));
}
BENCHMARK(BM_GeometricEntropy)->Arg(10)->Arg(1'000'000);

}  // namespace

BENCHMARK_MAIN();
