#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace icx {

__extension__ typedef unsigned __int128 u128;

/// ⌊√n⌋ exactly.
std::uint64_t isqrt(std::uint64_t n);
std::uint64_t isqrt(u128 n);

/// ⌊log₂n⌋ for n ≥ 1.
unsigned floor_log2(std::uint64_t n);
unsigned hamming_weight(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic strong-pseudoprime test, exact for every 64-bit n.
bool is_prime(std::uint64_t n);

/// All primes ≤ limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime factors of n with multiplicity, ascending, by trial division.
std::vector<std::uint64_t> trial_factorize(std::uint64_t n);

/// Every divisor d of n with 2 ≤ d and d² ≤ n, ascending, given the ascending
/// prime factorization of n. `out` is cleared first.
void small_divisors(std::uint64_t n, std::span<const std::uint64_t> factors,
                    std::vector<std::uint64_t>& out);

}  // namespace icx
