#include <benchmark/benchmark.h>

#include <qwork/core.hpp>
#include <qwork/random.hpp>
#include <qwork/work_stats.hpp>

namespace {

void BM_HermitianEigensystem(benchmark::State& state) {
    qwork::CounterStream rng(1, 0);
    const qwork::Operator h = qwork::random_hermitian(state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwork::hermitian_eigensystem(h));
    }
}
BENCHMARK(BM_HermitianEigensystem)->RangeMultiplier(2)->Range(2, 256);

void BM_UncertaintyCheck(benchmark::State& state) {
    qwork::CounterStream rng(2, 0);
    const auto dim = state.range(0);
    const qwork::Operator h1 = qwork::random_hermitian(dim, rng);
    const qwork::Operator h2 = qwork::random_hermitian(dim, rng);
    const qwork::DensityOperator rho = qwork::random_density(dim, rng);
    const qwork::Operator w = h2 - h1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwork::uncertainty_relation_check(w, h1, h2, rho));
    }
}
BENCHMARK(BM_UncertaintyCheck)->DenseRange(2, 8, 2);

}  // namespace
