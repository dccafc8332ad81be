#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace icx {

enum class AlgorithmTag : std::uint8_t { sieve = 0, dp = 1, oracle = 2 };

std::string_view to_string(AlgorithmTag tag);

/// ‖n‖ (and optionally rank(n)) for every n in [1, limit], one byte per value.
///
/// Storage is indexed directly by n; slot 0 is unused and holds zero. The
/// table is immutable once constructed and safe to share between threads.
class ComplexityTable {
 public:
  /// `complexity` and `rank` hold limit + 1 entries each (slot 0 ignored).
  ComplexityTable(std::vector<std::uint8_t> complexity,
                  std::optional<std::vector<std::uint8_t>> rank, AlgorithmTag tag);

  std::uint64_t limit() const noexcept { return complexity_.size() - 1; }
  AlgorithmTag tag() const noexcept { return tag_; }
  bool has_ranks() const noexcept { return rank_.has_value(); }

  /// Unchecked lookup for hot loops.
  unsigned operator[](std::uint64_t n) const noexcept { return complexity_[n]; }

  /// Range-checked ‖n‖; throws RangeError outside [1, limit].
  unsigned complexity(std::uint64_t n) const;
  /// Range-checked rank(n); throws CapabilityError without a rank column.
  unsigned rank(std::uint64_t n) const;

  std::span<const std::uint8_t> complexities() const noexcept { return complexity_; }
  std::span<const std::uint8_t> ranks() const noexcept;

  /// Copy of the first `limit` entries.
  ComplexityTable prefix(std::uint64_t limit) const;

  friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

 private:
  std::vector<std::uint8_t> complexity_;
  std::optional<std::vector<std::uint8_t>> rank_;
  AlgorithmTag tag_;
};

}  // namespace icx
