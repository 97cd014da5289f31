#include <benchmark/benchmark.h>

#include "phaseless/collocation.hpp"
#include "phaseless/frames.hpp"
#include "phaseless/generators.hpp"

namespace {

using namespace phaseless;

// Collocation frame of a uniform grid on [0, 2] with N columns, m = 2.
RationalMatrix frame(std::int64_t columns) {
    return build_collocation(uniform_grid(Window(0, 2), columns), Degree(2)).entries;
}

void BM_FrameCriterion(benchmark::State& state) {
    const RationalMatrix a = frame(state.range(0));
    const auto criterion = static_cast<FrameCriterion>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_almost_phase_retrievable(a, criterion));
    }
}
BENCHMARK(BM_FrameCriterion)
    ->ArgsProduct({{5, 7, 9}, {2, 3, 4, 5}})
    ->ArgNames({"N", "criterion"})
    ->Unit(benchmark::kMillisecond);

void BM_FullSpark(benchmark::State& state) {
    const RationalMatrix a = frame(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_full_spark(a));
    }
}
BENCHMARK(BM_FullSpark)->DenseRange(5, 11, 2);

}  // namespace
