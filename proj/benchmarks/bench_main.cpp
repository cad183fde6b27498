#include <benchmark/benchmark.h>

#include <cmath>

#include "rdsis/equilibria.hpp"
#include "rdsis/field.hpp"
#include "rdsis/ode.hpp"
#include "rdsis/pde.hpp"
#include "rdsis/stability.hpp"

using namespace rdsis;

namespace {

const ModelParams kParams{33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4, 3, 2};
const Incidence kInc = Incidence::saturated(13.0 / 4, 0.5);

void BM_OdeRhs(benchmark::State& state) {
    double u = 0.2, v = 0.6;
    for (auto _ : state) {
        const auto d = rhs_ode(kParams, kInc, u, v);
        benchmark::DoNotOptimize(d);
        u += 1e-12;
    }
}
BENCHMARK(BM_OdeRhs);

void BM_Laplacian(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = Field1D::sample(10, n, [](double x) { return std::cos(x); });
    std::vector<double> out(n);
    for (auto _ : state) {
        laplacian_neumann(f.values(), f.dx(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Laplacian)->Arg(201)->Arg(1601);

void BM_FindEndemic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(find_endemic(kParams, kInc));
}
BENCHMARK(BM_FindEndemic);

void BM_SpectralCheck(benchmark::State& state) {
    const NeumannSpectrum spectrum(10, 50);
    for (auto _ : state) benchmark::DoNotOptimize(pde_spectral_check(kParams, kInc, spectrum));
}
BENCHMARK(BM_SpectralCheck);

void BM_IntegrateOde(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(integrate_ode(kParams, kInc, {0.2, 4.3}, {20.0, 1e-3, 100}));
}
BENCHMARK(BM_IntegrateOde)->Unit(benchmark::kMillisecond);

void BM_IntegratePde(benchmark::State& state) {
    const auto u0 = Field1D::sample(10, 201, [](double x) { return 0.2 + std::cos(x) / 10; });
    const auto v0 = Field1D::sample(10, 201, [](double x) { return 0.6 + std::sin(x) / 10; });
    for (auto _ : state) benchmark::DoNotOptimize(integrate_pde(kParams, kInc, u0, v0, {1.0, 0.1, 0.0}));
}
BENCHMARK(BM_IntegratePde)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
