#include <benchmark/benchmark.h>

#include <random>

#include "icx/number_theory.hpp"

namespace {

void bm_is_prime_random(benchmark::State& state) {
  std::mt19937_64 rng(12345);
  std::vector<std::uint64_t> inputs(4096);
  for (auto& v : inputs) v = rng() | 1;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(icx::is_prime(inputs[i++ & 4095]));
  }
}

void bm_is_prime_large_prime(benchmark::State& state) {
  const std::uint64_t p = 18446744073709551557ull;
  for (auto _ : state) benchmark::DoNotOptimize(icx::is_prime(p));
}

void bm_trial_factorize(benchmark::State& state) {
  std::uint64_t n = 1'000'000;
  for (auto _ : state) {
    auto f = icx::trial_factorize(n++);
    benchmark::DoNotOptimize(f);
  }
}

}  // namespace

BENCHMARK(bm_is_prime_random);
BENCHMARK(bm_is_prime_large_prime);
BENCHMARK(bm_trial_factorize);
