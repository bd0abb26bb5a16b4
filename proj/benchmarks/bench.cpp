#include <benchmark/benchmark.h>

#include "alleedyn/equilibria.hpp"
#include "alleedyn/integrate.hpp"
#include "alleedyn/stability.hpp"

using namespace alleedyn;

namespace {

const ModelParams kParams{0.2, 0.5, 0.2, 0.3, 0.2, 0.1, 0.15, 0.12};
const State kState{0.9, 0.1, 0.1};

void BM_VectorField(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(vector_field(kParams, kState));
}
BENCHMARK(BM_VectorField);

void BM_Jacobian(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jacobian(kParams, kState));
}
BENCHMARK(BM_Jacobian);

void BM_Eigenvalues(benchmark::State& state) {
    const CharCubic c = char_cubic(jacobian(kParams, kState));
    for (auto _ : state)
        benchmark::DoNotOptimize(eigenvalues(c, 1e-8));
}
BENCHMARK(BM_Eigenvalues);

void BM_BoundaryEquilibria(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary_equilibria(kParams));
}
BENCHMARK(BM_BoundaryEquilibria);

void BM_InternalEquilibria(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(internal_equilibria_general(kParams));
}
BENCHMARK(BM_InternalEquilibria);

void BM_IntegrateRK45(benchmark::State& state) {
    IntegrationOpts o;
    o.t_end = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(kParams, kState, o));
}
BENCHMARK(BM_IntegrateRK45)->Arg(100)->Arg(1000);

void BM_IntegrateRK4(benchmark::State& state) {
    IntegrationOpts o;
    o.method = Method::RK4;
    o.t_end = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(kParams, kState, o));
}
BENCHMARK(BM_IntegrateRK4)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
