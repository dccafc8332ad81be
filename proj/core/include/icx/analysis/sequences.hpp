#pragma once

#include <cstdint>
#include <map>

#include "icx/table.hpp"

namespace icx {

struct SequenceEntry {
  std::uint64_t value = 0;
  /// The value is provably the true sequence value, not an artifact of the
  /// table ending at its limit.
  bool reliable = false;
};

/// Sequences read off a finished table, keyed by their index.
///   e[k]       smallest m with ‖m‖ = k
///   E_emp[k]   largest m with ‖m‖ ≤ k
///   E2_emp[k]  second largest m with ‖m‖ ≤ k
///   r[k]       smallest m with rank(m) = k
struct SequenceSet {
  std::uint64_t limit = 0;
  AlgorithmTag source = AlgorithmTag::sieve;
  std::map<unsigned, SequenceEntry> e;
  std::map<unsigned, SequenceEntry> E_emp;
  std::map<unsigned, SequenceEntry> E2_emp;
  std::map<unsigned, SequenceEntry> r;
  bool has_rank = false;

  /// Largest k such that every index 1..k (0..k for r) is present and reliable; 0 if none.
  unsigned e_reliable_max() const;
  unsigned E_reliable_max() const;
  unsigned r_reliable_max() const;
};

/// Includes r when the table carries ranks.
SequenceSet derive_sequences(const ComplexityTable& table);
/// Throws CapabilityError when `want_rank` is set and the table has no ranks.
SequenceSet derive_sequences(const ComplexityTable& table, bool want_rank);

}  // namespace icx
