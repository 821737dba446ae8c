// Serial-vs-OpenMP throughput of the batch kernels.

#include <benchmark/benchmark.h>

#include "chronon/batch.hpp"

using namespace chronon;

namespace {

SampleSpec scatter_spec(std::size_t count) {
    SampleSpec spec;
    spec.m = 2;
    spec.d1 = 2;
    spec.d2 = 2;
    spec.d3 = 2;
    spec.seed = 42;
    spec.count = count;
    return spec;
}

void bm_scatter_sot_serial(benchmark::State& state) {
    SampleSpec spec = scatter_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto rows = batch::scatter_sot(spec, SotKind::sym_bloom(), LogBase::two(),
                                       batch::Mode::Serial);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_scatter_sot_parallel(benchmark::State& state) {
    SampleSpec spec = scatter_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto rows = batch::scatter_sot(spec, SotKind::sym_bloom(), LogBase::two(),
                                       batch::Mode::Parallel);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_scatter_quasi_serial(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::scatter_quasi(2, 2, 4, 3.0, 42, static_cast<std::size_t>(state.range(0)),
                                         LogBase::two(), batch::Mode::Serial);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_scatter_quasi_parallel(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::scatter_quasi(2, 2, 4, 3.0, 42, static_cast<std::size_t>(state.range(0)),
                                         LogBase::two(), batch::Mode::Parallel);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_scan_bitflip_serial(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::scan_bitflip(state.range(0), SotKind::sym_bloom(), LogBase::two(),
                                        batch::Mode::Serial);
        benchmark::DoNotOptimize(rows);
    }
}

void bm_scan_bitflip_parallel(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::scan_bitflip(state.range(0), SotKind::sym_bloom(), LogBase::two(),
                                        batch::Mode::Parallel);
        benchmark::DoNotOptimize(rows);
    }
}

void bm_bayes_samples_serial(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::bayes_samples(SotKind::sym_bloom(), 2, 2, 2, 42,
                                         static_cast<std::size_t>(state.range(0)), LogBase::two(),
                                         batch::Mode::Serial);
        benchmark::DoNotOptimize(rows);
    }
}

void bm_bayes_samples_parallel(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = batch::bayes_samples(SotKind::sym_bloom(), 2, 2, 2, 42,
                                         static_cast<std::size_t>(state.range(0)), LogBase::two(),
                                         batch::Mode::Parallel);
        benchmark::DoNotOptimize(rows);
    }
}

} // namespace

BENCHMARK(bm_scatter_sot_serial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scatter_sot_parallel)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scatter_quasi_serial)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scatter_quasi_parallel)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scan_bitflip_serial)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_scan_bitflip_parallel)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bayes_samples_serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bayes_samples_parallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
