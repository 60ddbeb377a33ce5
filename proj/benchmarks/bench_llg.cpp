#include <mtjsyn/protocols.hpp>

#include <benchmark/benchmark.h>

using namespace mtjsyn;

namespace {

void BM_HeunStep(benchmark::State &state) {
    const DeviceParams d = DeviceParams::reference();
    const LlgIntegrator integ(d, demag_factors(d), {});
    RngStream rng(1, 0);
    MagnetizationState s{unit_vector_from_angles(3.0, 0.0), 0.0};
    const double current = static_cast<double>(state.range(0)) * 1e-6;
    for (auto _ : state) {
        s = integ.step(s, current, rng);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HeunStep)->Arg(0)->Arg(100);

void BM_Trial(benchmark::State &state) {
    const DeviceParams d = DeviceParams::reference();
    const LlgIntegrator integ(d, demag_factors(d), {});
    PulseTrain train;
    train.interval = static_cast<double>(state.range(0)) * 1e-9;
    std::uint64_t k = 0;
    for (auto _ : state) {
        RngStream rng(1, k++);
        benchmark::DoNotOptimize(run_trial(train, integ, rng));
    }
}
BENCHMARK(BM_Trial)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Demag(benchmark::State &state) {
    DeviceParams d = DeviceParams::reference();
    if (state.range(0) != 0) d.axis_b = 60e-9;
    for (auto _ : state) benchmark::DoNotOptimize(demag_factors(d));
}
BENCHMARK(BM_Demag)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
