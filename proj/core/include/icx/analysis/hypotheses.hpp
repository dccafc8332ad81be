#pragma once

// Checks of conjectured and proved identities over the range of a table.
// Counterexamples are data: they turn Report::holds false and are listed as
// rows, never thrown.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "icx/analysis/sequences.hpp"
#include "icx/report.hpp"
#include "icx/table.hpp"

namespace icx {

/// Table invariants: ⌈3·log₃n⌉ ≤ ‖n‖ ≤ ⌊3·log₂n⌋, ‖n‖ ≤ ‖n−1‖ + 1,
/// ‖ab‖ ≤ ‖a‖ + ‖b‖, n ≤ E(‖n‖), ‖3^b‖ = 3b, and the rank column basics.
Report check_bounds(const ComplexityTable& t);

enum class ProductKind { pow2, pow3, pow235 };

/// ‖2^a‖ = 2a, ‖3^b‖ = 3b, or ‖2^a·3^b·5^c‖ = 2a + 3b + 5c (a+b+c > 0, c < 6).
Report check_products(const ComplexityTable& t, ProductKind kind);

/// ‖2^n + 1‖ = 2n + 1 for n ≥ 1 except ‖9‖ = 6 and ‖513‖ = 18.
Report check_pow2_plus1(const ComplexityTable& t);

struct MersenneRow {
  unsigned n = 0;
  int a = 0;                 // ‖2^n − 1‖ − 2n
  std::optional<int> b;      // ‖2^n + 1‖ − 2n, when in range
  std::optional<int> cap;    // ⌊log₂n⌋ + H(n) − 3, for n ≥ 2
  bool within_cap = true;
};

std::vector<MersenneRow> mersenne_table(const ComplexityTable& t);

/// The A/B rows plus: A(n) under the Hamming-weight cap and 2⌊log₂n⌋ − 2,
/// A(2n) ≤ A(n)+B(n), A(3n) ≤ A(n)+B(n)+1, A(n+1) ≤ A(n)+1, and
/// ‖2^(2^k) − 1‖ = 2·2^k + k − 2 for k ≥ 1.
Report check_mersenne(const ComplexityTable& t);

/// d(n) ≥ ⌊(rank(n) − 1)/2⌋·(1 + 3·log₃(6/7)) for every n. Needs ranks.
Report check_defect_rank(const ComplexityTable& t);

/// Reliable E_emp(k) = E(k) and, for k ≥ 8, E2_emp(k) = 8·E(k)/9.
Report check_e_closed(const SequenceSet& seq);

/// ‖p‖ = 1 + ‖p − 1‖ for every prime p ≤ limit.
Report check_prime_successor(const ComplexityTable& t);

/// Every reliable e(k) is prime except for k in `exceptions`.
inline const std::set<unsigned> kCompositeE = {1, 4, 7, 10, 25};
Report check_e_primality(const SequenceSet& seq, const std::set<unsigned>& exceptions = kCompositeE);

/// ‖n‖_log ≤ ‖e(‖n‖)‖_log for every n ≥ 2.
Report check_log_ceiling(const ComplexityTable& t);

}  // namespace icx
