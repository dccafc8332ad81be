#include <benchmark/benchmark.h>

#include "icx/sieve.hpp"

namespace {

void bm_sieve(benchmark::State& state) {
  icx::SieveOptions options;
  options.with_ranks = state.range(1) != 0;
  options.bootstrap = state.range(2) != 0;
  for (auto _ : state) {
    auto table = icx::build_sieve(static_cast<std::uint64_t>(state.range(0)), options);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_bootstrap_addends(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  icx::SieveOptions exact;
  exact.bootstrap = false;
  const auto table = icx::build_sieve(n, exact);
  for (auto _ : state) {
    auto addends = icx::bootstrap_addends(table.complexities());
    benchmark::DoNotOptimize(addends);
  }
}

}  // namespace

BENCHMARK(bm_sieve)
    ->ArgsProduct({{10'000, 100'000, 1'000'000}, {0, 1}, {1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sieve)->Args({100'000, 0, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bootstrap_addends)->Arg(10'000)->Arg(100'000);
