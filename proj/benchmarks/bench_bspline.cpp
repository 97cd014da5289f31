#include <benchmark/benchmark.h>

#include "phaseless/bspline.hpp"
#include "phaseless/collocation.hpp"
#include "phaseless/generators.hpp"

namespace {

using namespace phaseless;

void BM_EvalBspline(benchmark::State& state) {
    const Degree m(static_cast<int>(state.range(0)));
    const Rational x(7, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_bspline(m, x));
    }
}
BENCHMARK(BM_EvalBspline)->DenseRange(1, 5);

void BM_BuildCollocation(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const SampleSet e = uniform_grid(Window(0, length), 2 * length + 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_collocation(e, Degree(2)));
    }
}
BENCHMARK(BM_BuildCollocation)->RangeMultiplier(2)->Range(2, 16);

void BM_ExactRank(benchmark::State& state) {
    const std::int64_t length = state.range(0);
    const RationalMatrix phi = build_collocation(uniform_grid(Window(0, length), 2 * length + 3), Degree(2)).entries;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_rank(phi));
    }
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
