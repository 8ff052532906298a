#include <benchmark/benchmark.h>

#include "cyclecollide/exact.hpp"

namespace {

namespace ex = cyclecollide::exact;

void BM_StirlingRow(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ex::stirling_row(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StirlingRow)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_FExact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ex::f_exact(n));
  }
}
BENCHMARK(BM_FExact)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_PExactDecimal(benchmark::State& state) {
  const auto p = ex::p_exact(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ex::to_decimal_string(p.as_rational(), 20));
  }
}
BENCHMARK(BM_PExactDecimal)->Arg(100)->Arg(1000);

}  // namespace
