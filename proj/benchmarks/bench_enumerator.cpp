#include <benchmark/benchmark.h>

#include "icx/enumerator.hpp"

namespace {

void bm_oracle_single(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  icx::OracleOptions options;
  options.collect_all = state.range(1) != 0;
  for (auto _ : state) {
    auto result = icx::oracle_complexity(n, options);
    benchmark::DoNotOptimize(result);
  }
}

void bm_oracle_shared_range(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  icx::OracleOptions options;
  options.collect_all = false;
  for (auto _ : state) {
    icx::Enumerator enumerator;
    for (std::uint64_t n = 1; n <= limit; ++n) benchmark::DoNotOptimize(enumerator.solve(n, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_oracle_single)->ArgsProduct({{1439, 4283}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_oracle_shared_range)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
