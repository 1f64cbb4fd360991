#include "jband/bessel.hpp"
#include "jband/propagator.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BesselRow(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    const double x = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(jband::bessel_j_row(n_max, x));
}
BENCHMARK(BM_BesselRow)->Args({50, 30})->Args({150, 300})->Args({500, 500})->Args({2000, 1000});

void BM_BesselSingle(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jband::bessel_j(7, x));
}
BENCHMARK(BM_BesselSingle)->Arg(1)->Arg(100)->Arg(500);

void BM_OccupationProfile(benchmark::State& state) {
    const jband::ModelParams p{0.3, 0.2, 30.0, 1.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(jband::occupation_profile(6.0, p));
}
BENCHMARK(BM_OccupationProfile)->Arg(50)->Arg(200)->Arg(1000);

}  // namespace
