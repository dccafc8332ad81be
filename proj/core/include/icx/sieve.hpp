#pragma once

// Relaxation sieve: alternating multiplication and addition passes over
// f[1..N] until nothing changes. The pass at which f[n] last improves is the
// least height of a shortest expression for n, so ranks come for free.

#include <cstdint>
#include <span>
#include <vector>

#include "icx/table.hpp"

namespace icx {

struct SieveOptions {
  bool with_ranks = false;
  /// Restrict addition passes to addends from bootstrap_addends() computed on
  /// an exact prefix table. The result is identical either way; without it the
  /// first addition pass scans far more addends and dominates the run time.
  bool bootstrap = true;
  /// Start from ⌊3·log₂n⌋ instead of f[n] = n. Complexities only: ranks are
  /// meaningless under this start and requesting both is a ConfigError.
  bool init_upper_bound = false;
};

class Sieve {
 public:
  /// Throws ConfigError if limit is 0 or the arrays would not fit in physical
  /// memory.
  Sieve(std::uint64_t limit, const SieveOptions& options = {});

  /// Runs the next pass (multiplication on even heights, addition on odd) and
  /// reports whether any entry improved.
  bool run_pass();
  /// Runs passes until two consecutive passes change nothing.
  void run();

  bool converged() const noexcept { return quiet_passes_ >= 2; }
  /// Height the next pass will assign to the values it improves.
  unsigned next_height() const noexcept { return height_; }
  std::uint64_t limit() const noexcept { return f_.size() - 1; }
  std::span<const std::uint8_t> values() const noexcept { return f_; }
  std::span<const std::uint64_t> addends() const noexcept { return addends_; }

  /// Snapshot of the current state. Only exact once converged().
  ComplexityTable table() const;

 private:
  bool multiplication_pass();
  bool addition_pass();

  std::vector<std::uint8_t> f_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint64_t> addends_;  // empty: every j is tried
  unsigned height_ = 2;
  unsigned quiet_passes_ = 0;
};

ComplexityTable build_sieve(std::uint64_t limit, bool with_ranks);
ComplexityTable build_sieve(std::uint64_t limit, const SieveOptions& options);

/// Values whose complexity in `f` is attained without a top-level sum: 1 and
/// every i with some i = d·q, d ≤ q, f[d] + f[q] = f[i]. `f` is indexed by
/// value (slot 0 ignored) and must be exact for the result to be a safe
/// addend set. Ascending.
std::vector<std::uint64_t> bootstrap_addends(std::span<const std::uint8_t> f);

/// Largest smallest-addend an optimal sum split can use for any n ≤ limit,
/// i.e. the prefix length the bootstrap set must cover.
std::uint64_t bootstrap_prefix(std::uint64_t limit);

}  // namespace icx
