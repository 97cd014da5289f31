#include <benchmark/benchmark.h>

#include "phaseless/generators.hpp"
#include "phaseless/sequences.hpp"

namespace {

using namespace phaseless;

void BM_LocalPhaseless(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const SampleSet e = example2_set(Window(0, length), Degree(2), 2 * length - 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_local_phaseless(e, Degree(2)));
    }
    state.SetComplexityN(length);
}
BENCHMARK(BM_LocalPhaseless)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_AlmostPhaseless(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const SampleSet e = uniform_grid(Window(0, length), length + 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_almost_phaseless(e, Degree(2)));
    }
}
BENCHMARK(BM_AlmostPhaseless)->RangeMultiplier(2)->Range(4, 64);

void BM_GlobalPhaseless(benchmark::State& state) {
    // alpha = 2/q just below 1/2 gives period 2 with q offsets.
    const std::int64_t q = state.range(0);
    const PeriodicSetDescriptor d = arithmetic_progression(Rational(2, q), Rational(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_global_phaseless(d, Degree(2)));
    }
}
BENCHMARK(BM_GlobalPhaseless)->Arg(5)->Arg(7)->Arg(9)->Arg(15);

void BM_ExtractMinimalAlmost(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const SampleSet e = uniform_grid(Window(0, length), 3 * length + 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_minimal_almost(e, Degree(2)));
    }
}
BENCHMARK(BM_ExtractMinimalAlmost)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
