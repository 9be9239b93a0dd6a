#include <benchmark/benchmark.h>

#include "ptcd/engine.hpp"
#include "ptcd/outage.hpp"
#include "ptcd/rng.hpp"
#include "ptcd/schemes.hpp"

using namespace ptcd;

namespace {

const TrialStreams kStreams{42, stream_domain::kTest, 0, 0};

void BM_PhiloxBlock(benchmark::State& state) {
    std::array<std::uint32_t, 4> counter{1, 2, 3, 4};
    std::array<std::uint32_t, 2> key{5, 6};
    for (auto _ : state) {
        counter[0] += 1;
        benchmark::DoNotOptimize(philox4x32(counter, key));
    }
}
BENCHMARK(BM_PhiloxBlock);

void BM_GammaSample(benchmark::State& state) {
    auto rng = kStreams.at(7);
    const double shape = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.next_gamma(shape, 1.0));
    }
}
BENCHMARK(BM_GammaSample)->Arg(5)->Arg(15)->Arg(20);

/// Trials per second of the superposition outage estimator. High SNR is the
/// regime the early-exit accumulation is built for.
void BM_SuperpositionTrials(benchmark::State& state) {
    const auto weights = PowerWeights::reference(static_cast<std::size_t>(state.range(0)));
    const auto model = FadingModel::rayleigh(1.0);
    const auto qos = QosTarget::from_rate(1.0);
    const double snr = snr_db_to_linear(static_cast<double>(state.range(1)));
    const std::uint64_t batch = 4096;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            superposition_outage_events(weights, model, qos, snr, trial, trial + batch, kStreams));
        trial += batch;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch));
}
BENCHMARK(BM_SuperpositionTrials)
    ->ArgsProduct({{2, 3, 4}, {0, 20, 40}})
    ->ArgNames({"branches", "snr_db"});

void BM_BenchmarkTrials(benchmark::State& state) {
    const BenchmarkScheme schemes[] = {BenchmarkScheme::direct(), BenchmarkScheme::stbc(2),
                                       BenchmarkScheme::cooperative(1)};
    const auto& scheme = schemes[state.range(0)];
    const auto model = FadingModel::rayleigh(1.0);
    const auto qos = QosTarget::from_rate(1.0);
    const double snr = snr_db_to_linear(20.0);
    const std::uint64_t batch = 4096;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            benchmark_outage_events(scheme, model, qos, snr, trial, trial + batch, kStreams));
        trial += batch;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch));
}
BENCHMARK(BM_BenchmarkTrials)->DenseRange(0, 2)->ArgNames({"scheme"});

/// Whole-engine scaling: one small sweep per iteration.
void BM_SweepEngine(benchmark::State& state) {
    SweepConfig config;
    config.snr_grid_db = {0.0, 10.0, 20.0};
    config.trials_per_point = 50000;
    config.master_seed = 3;
    config.schemes = {SchemeSpec::superposed(PowerWeights::reference(2)), SchemeSpec::direct()};
    config.qos = QosTarget::from_rate(1.0);
    config.model = FadingModel::rayleigh(1.0);
    const unsigned workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(config, workers));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(
        state.iterations() * config.trials_per_point * config.snr_grid_db.size() *
        config.schemes.size()));
}
BENCHMARK(BM_SweepEngine)->Arg(1)->Arg(2)->Arg(4)->ArgNames({"workers"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
