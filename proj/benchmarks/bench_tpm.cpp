#include <benchmark/benchmark.h>

#include <qwork/tpm.hpp>

namespace {

void BM_TpmMonteCarlo(benchmark::State& state) {
    const qwork::GravityModel model(1.0, 1.0);
    const qwork::MeasurementResolution res(0.1, 1e-4);
    const auto protocol = state.range(1) == 0 ? qwork::TpmProtocol::position : qwork::TpmProtocol::momentum;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qwork::tpm_monte_carlo(model, {0.0, 2.0, 1.0}, {0.0, 1.0}, res, protocol, n, 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TpmMonteCarlo)->ArgsProduct({{1000, 100000}, {0, 1}});

}  // namespace
