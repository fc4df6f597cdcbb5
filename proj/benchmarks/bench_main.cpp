#include <benchmark/benchmark.h>

#include "gwx/hodge.hpp"
#include "gwx/wallcross.hpp"

namespace {

void BM_SincHalfPower(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gwx::pow_int(gwx::sinc_half(order), -7));
}
BENCHMARK(BM_SincHalfPower)->Arg(12)->Arg(24)->Arg(48);

void BM_RawSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gwx::correction_raw_sum(3, n, 4, 11));
}
BENCHMARK(BM_RawSum)->DenseRange(0, 4);

void BM_IFunctionExpansion(benchmark::State& state) {
    const int order_u = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gwx::i_function_expansion(order_u));
}
BENCHMARK(BM_IFunctionExpansion)->Arg(6)->Arg(10)->Arg(14);

void BM_RawGrid(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gwx::verify_raw_equals_closed(3, 4, -2, 6, 11));
}
BENCHMARK(BM_RawGrid)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
