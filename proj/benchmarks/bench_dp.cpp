#include <benchmark/benchmark.h>

#include "icx/dp.hpp"
#include "icx/eliminator_queue.hpp"

namespace {

void bm_dp(benchmark::State& state) {
  icx::DpOptions options;
  options.first_sum_addend = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto table = icx::build_dp(static_cast<std::uint64_t>(state.range(0)), options);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_eliminator_queue(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  std::vector<std::uint64_t> factors;
  for (auto _ : state) {
    icx::EliminatorQueue queue(limit);
    for (std::uint64_t n = 2; n <= limit; ++n) {
      queue.factorize_at(n, factors);
      benchmark::DoNotOptimize(factors.data());
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_dp)->ArgsProduct({{100'000, 1'000'000}, {1, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_eliminator_queue)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
