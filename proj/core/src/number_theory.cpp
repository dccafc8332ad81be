#include "icx/number_theory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace icx {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t isqrt(u128 n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  auto sq = [](std::uint64_t x) { return static_cast<u128>(x) * x; };
  while (r > 0 && sq(r) > n) --r;
  while (r < UINT64_MAX && sq(r + 1) <= n) ++r;
  return r;
}

unsigned floor_log2(std::uint64_t n) { return static_cast<unsigned>(std::bit_width(n)) - 1; }

unsigned hamming_weight(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  // The first twelve primes as bases are a deterministic witness set below 3.3·10^24.
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  const std::uint64_t d0 = n - 1;
  const int s = std::countr_zero(d0);
  const std::uint64_t d = d0 >> s;
  return std::ranges::all_of(kBases, [&](std::uint64_t a) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) return true;
    }
    return false;
  });
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return primes;
}

std::vector<std::uint64_t> trial_factorize(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

void small_divisors(std::uint64_t n, std::span<const std::uint64_t> factors,
                    std::vector<std::uint64_t>& out) {
  out.clear();
  out.push_back(1);
  const std::uint64_t root = isqrt(n);
  std::size_t i = 0;
  while (i < factors.size()) {
    const std::uint64_t p = factors[i];
    std::size_t mult = 0;
    while (i < factors.size() && factors[i] == p) {
      ++mult;
      ++i;
    }
    const std::size_t base = out.size();
    for (std::size_t b = 0; b < base; ++b) {
      std::uint64_t d = out[b];
      for (std::size_t e = 0; e < mult; ++e) {
        if (d > root / p) break;
        d *= p;
        out.push_back(d);
      }
    }
  }
  std::erase(out, std::uint64_t{1});
  std::sort(out.begin(), out.end());
}

}  // namespace icx
