#pragma once

// Sequential builder: ‖n‖ = min(1 + ‖n−1‖, min over d·q = n of ‖d‖ + ‖q‖,
// min over sum splits a + (n−a)), one n at a time, with divisors taken from
// an eliminator queue and periodic checkpoints in the ICX1 format.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "icx/eliminator_queue.hpp"
#include "icx/table.hpp"

namespace icx {

struct DpOptions {
  /// Write a checkpoint every this many entries (0 disables checkpoints).
  std::uint64_t checkpoint_every = 0;
  std::filesystem::path checkpoint_path;
  /// First addend of the sum scan after the 1 + f[n−1] seed. Addends 2..5
  /// never win alone; 1 re-scans them as a cross-check.
  std::uint64_t first_sum_addend = 6;
};

class DpBuilder {
 public:
  DpBuilder(std::uint64_t limit, DpOptions options = {});

  /// Continues from a partial checkpoint. `limit` may differ from the limit
  /// stored in the file but must exceed its position.
  static DpBuilder resume(const std::filesystem::path& checkpoint, std::uint64_t limit,
                          DpOptions options = {});

  /// Computes entries through n (≤ limit), writing checkpoints on the way.
  void advance_to(std::uint64_t n);
  /// Saves entries 1..position() as a partial checkpoint.
  void write_checkpoint(const std::filesystem::path& path);
  /// Computes the remaining entries and hands over the finished table.
  ComplexityTable finish();

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t position() const noexcept { return f_.size() - 1; }
  /// Position of the last checkpoint known to be on disk.
  std::uint64_t durable_position() const noexcept { return durable_; }

 private:
  DpBuilder(std::uint64_t limit, DpOptions options, std::vector<std::uint8_t> prefix);
  void step();

  std::uint64_t limit_;
  DpOptions options_;
  std::vector<std::uint8_t> f_;
  EliminatorQueue queue_;
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint64_t> divisors_;
  std::uint64_t durable_ = 0;
};

ComplexityTable build_dp(std::uint64_t limit, const DpOptions& options = {});

/// Finishes a checkpointed build. A limit at or below the checkpoint position
/// returns that prefix without recomputation. Damaged files raise IntegrityError.
ComplexityTable resume_dp(const std::filesystem::path& checkpoint, std::uint64_t limit,
                          const DpOptions& options = {});

}  // namespace icx
