#pragma once

// ICX1 table files. Layout, all integers little-endian:
//
//   "ICX1"  u32 version  u64 limit  u32 flags  [u64 position]  payload  u64 checksum
//
// flags bit 0: rank section present; bit 1: partial checkpoint, in which case
// the position field follows the flags; bits 2-3: algorithm tag. The payload
// holds one complexity byte per n = 1..limit (1..position when partial), then
// as many rank bytes when flagged. The checksum is the byte sum of the payload
// modulo 2^64.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "icx/table.hpp"

namespace icx {

inline constexpr std::uint32_t kIcxVersion = 1;

struct IcxImage {
  std::uint64_t limit = 0;
  /// Set for partial checkpoints: entries 1..position are final.
  std::optional<std::uint64_t> position;
  AlgorithmTag tag = AlgorithmTag::sieve;
  /// Indexed by n, slot 0 unused; covered() + 1 entries.
  std::vector<std::uint8_t> complexity;
  std::optional<std::vector<std::uint8_t>> rank;

  bool partial() const noexcept { return position.has_value(); }
  std::uint64_t covered() const noexcept { return position.value_or(limit); }
};

std::vector<std::uint8_t> encode_icx(const IcxImage& image);
std::vector<std::uint8_t> encode_icx(const ComplexityTable& table);

/// Throws IntegrityError with a kind matching the first defect found.
IcxImage decode_icx(std::span<const std::uint8_t> bytes);

/// Writes `bytes` beside `path` and renames over it, so readers never observe
/// a half-written file. Throws IoError carrying `durable_position`.
void write_atomically(const std::filesystem::path& path, std::span<const std::uint8_t> bytes,
                      std::uint64_t durable_position = 0);

void save_table(const ComplexityTable& table, const std::filesystem::path& path);

/// Loads a complete table. Partial checkpoints are rejected with ConfigError;
/// read them with read_icx() or resume them with the dp builder.
ComplexityTable load_table(const std::filesystem::path& path);

IcxImage read_icx(const std::filesystem::path& path);

}  // namespace icx
