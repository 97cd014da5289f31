#include <benchmark/benchmark.h>

#include "phaseless/generators.hpp"
#include "phaseless/retrieval.hpp"

namespace {

using namespace phaseless;

SplineFunction alternating(Degree m, const Window& window) {
    std::vector<Rational> c;
    for (std::int64_t i = 0; i < basis_size(m, window); ++i) {
        c.push_back(Rational(i % 2 == 0 ? 2 : -1));
    }
    return SplineFunction::on_window(m, window, std::move(c));
}

void BM_ReconstructUnique(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const Degree m(2);
    const Window window(0, length);
    const SampleSet e = example2_set(window, m, 2 * length - 3);
    const UnsignedSamples data = UnsignedSamples::measure(alternating(m, window), e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(data, m));
    }
}
BENCHMARK(BM_ReconstructUnique)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PartitionOracle(benchmark::State& state) {
    const std::int64_t points = state.range(0);
    const SampleSet e = uniform_grid(Window(0, 2), points);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_oracle(e, Degree(1)));
    }
}
BENCHMARK(BM_PartitionOracle)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_BuildCounterexample(benchmark::State& state) {
    // Uniform grid one point short of the cardinality bound.
    const std::int64_t length = state.range(0);
    const Degree m(1);
    const SampleSet e = uniform_grid(Window(0, length), 2 * (length + 1) - 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_counterexample(e, m));
    }
}
BENCHMARK(BM_BuildCounterexample)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
