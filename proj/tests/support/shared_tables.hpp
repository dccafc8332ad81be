#pragma once

#include "icx/sieve.hpp"

namespace icx::testing {

inline constexpr std::uint64_t kSharedLimit = 100'000;

/// Sieve table with ranks up to kSharedLimit, built once per process.
inline const ComplexityTable& shared_table() {
  static const ComplexityTable table = build_sieve(kSharedLimit, true);
  return table;
}

}  // namespace icx::testing
