#include <benchmark/benchmark.h>

#include <qwork/dynamics.hpp>
#include <qwork/grid.hpp>

namespace {

void BM_SplitOperatorStep(benchmark::State& state) {
    const qwork::GridSpec grid(static_cast<std::size_t>(state.range(0)), -40.0, 40.0);
    const qwork::WaveFunction1D psi = qwork::gaussian_wavefunction({0.0, 1.0, 2.0}, grid);
    const qwork::Potential v = [](double x) { return 0.5 * x * x; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwork::split_operator_evolve(psi, v, 1.0, 0.1, 100));
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SplitOperatorStep)->RangeMultiplier(4)->Range(256, 1 << 14);

void BM_GravityPropagatorFft(benchmark::State& state) {
    const qwork::GridSpec grid(static_cast<std::size_t>(state.range(0)), -40.0, 40.0);
    const qwork::WaveFunction1D psi = qwork::gaussian_wavefunction({0.0, 1.0, 2.0}, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwork::apply_gravity_propagator(psi, 1.0, 1.0, 1.0));
    }
}
BENCHMARK(BM_GravityPropagatorFft)->RangeMultiplier(4)->Range(256, 1 << 14);

}  // namespace
