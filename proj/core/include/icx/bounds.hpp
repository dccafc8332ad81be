#pragma once

// Analytic bounds and closed forms for integer complexity ‖n‖, the least
// number of ones needed to write n with +, * and parentheses.

#include <cstdint>

namespace icx {

/// Largest argument for which e_closed() fits in 64 bits (E(121) = 4·3^39).
inline constexpr unsigned kMaxClosedFormIndex = 121;

struct BoundPair {
  double lower;
  double upper;
};

/// Real-valued bounds 3·log₃n ≤ ‖n‖ ≤ 3·log₂n for n ≥ 2.
BoundPair complexity_bounds(std::uint64_t n);

/// ⌈3·log₃n⌉, the smallest integer c with n³ ≤ 3^c. Evaluated in exact
/// integer arithmetic, so powers of three land on 3b and not 3b±1.
unsigned complexity_lower_bound(std::uint64_t n);

/// ⌊3·log₂n⌋, the smallest integer cap guaranteed to admit ‖n‖ (n ≥ 2); 1 for n = 1.
unsigned complexity_upper_bound(std::uint64_t n);

/// E(n): the largest m with ‖m‖ = n. 1 for n = 1, otherwise 2·3^k, 3·3^k, 4·3^k
/// for n = 3k+2, 3k+3, 3k+4.
std::uint64_t e_closed(unsigned n);

/// Second largest m with ‖m‖ ≤ n, equal to 8·E(n)/9 for n ≥ 8.
std::uint64_t e2_closed(unsigned n);

/// Sum of prime factors with multiplicity: the ones-count of the flat
/// product-of-sums expression built from the prime decomposition.
std::uint64_t integer_logarithm(std::uint64_t n);

/// ‖n‖ / log₃n for n ≥ 2, given c = ‖n‖.
double log_complexity(std::uint64_t n, unsigned c);

/// c − 3·log₃n, given c = ‖n‖.
double defect(std::uint64_t n, unsigned c);

/// Largest value the smaller-complexity addend of an optimal sum split of n
/// can take, given any c_upper ≥ ‖n‖:
///   ⌊(n − √(n² − 4·E(c_upper)))/2⌋, clamped to ⌊n/2⌋.
/// The clamp also covers a negative discriminant and c_upper beyond the
/// 64-bit range of E.
std::uint64_t addend_bound(std::uint64_t n, unsigned c_upper);

/// 2n + ⌊log₂n⌋ + H(n) − 3, an upper bound on ‖2ⁿ − 1‖ (H = binary Hamming weight).
std::uint64_t mersenne_upper_bound(std::uint64_t n);

}  // namespace icx
