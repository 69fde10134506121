#include <benchmark/benchmark.h>

#include "pnr/mc_oracle.hpp"
#include "pnr/quality.hpp"
#include "pnr/solvers.hpp"

using namespace pnr;

namespace {

void BM_SpatialResponseDouble(benchmark::State& state) {
    const SpatialArrayConfig config(static_cast<int>(state.range(0)), ClickModel(0.9, 0.01));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spatial_response(config, 8));
    }
}
BENCHMARK(BM_SpatialResponseDouble)->Arg(8)->Arg(24)->Arg(40);

void BM_SpatialResponseBig(benchmark::State& state) {
    const SpatialArrayConfig config(static_cast<int>(state.range(0)), ClickModel(0.9, 0.01));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spatial_response(config, 8));
    }
}
BENCHMARK(BM_SpatialResponseBig)->Arg(64)->Arg(128);

void BM_LoopResponse(benchmark::State& state) {
    const LoopDetectorConfig config(0.3, 0.97, static_cast<int>(state.range(0)),
                                    ClickModel(0.9, 0.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(loop_response(config, 5));
    }
}
BENCHMARK(BM_LoopResponse)->Arg(8)->Arg(32);

void BM_QualityFullSet(benchmark::State& state) {
    const DetectorConfig config = SpatialArrayConfig(16, ClickModel(0.95, 0.002));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_quality(config, 6, AllDistributions{}));
    }
}
BENCHMARK(BM_QualityFullSet);

void BM_QualityPoissonScan(benchmark::State& state) {
    const DetectorConfig config = SpatialArrayConfig(16, ClickModel(0.95, 0.002));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_quality(config, 6, PoissonFamily{}));
    }
}
BENCHMARK(BM_QualityPoissonScan);

void BM_EtaThreshold(benchmark::State& state) {
    const DetectorConfig family = SpatialArrayConfig(8, ClickModel(1.0, 0.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eta_threshold(family, 3, 0.5, AllDistributions{}));
    }
}
BENCHMARK(BM_EtaThreshold);

void BM_McSpatialTrials(benchmark::State& state) {
    const DetectorConfig config = SpatialArrayConfig(8, ClickModel(0.7, 0.01));
    const McRun run(static_cast<uint64_t>(state.range(0)), 42, config, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_spatial(run, 8));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McSpatialTrials)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
