#include "icx/io/icx_file.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>
#include <system_error>

#include "icx/errors.hpp"

namespace icx {
namespace {

constexpr char kMagic[4] = {'I', 'C', 'X', '1'};
constexpr std::uint32_t kFlagRanks = 1u << 0;
constexpr std::uint32_t kFlagPartial = 1u << 1;
constexpr unsigned kTagShift = 2;
constexpr std::uint32_t kTagMask = 3u << kTagShift;
constexpr std::uint32_t kKnownFlags = kFlagRanks | kFlagPartial | kTagMask;

template <typename T>
void put(std::vector<std::uint8_t>& out, T value) {
  for (unsigned i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get(std::span<const std::uint8_t> bytes, std::size_t at) {
  T value = 0;
  for (unsigned i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[at + i]) << (8 * i);
  return value;
}

std::uint64_t byte_sum(std::span<const std::uint8_t> bytes) {
  return std::accumulate(bytes.begin(), bytes.end(), std::uint64_t{0});
}

std::vector<std::uint8_t> encode(std::uint64_t limit, std::optional<std::uint64_t> position,
                                 AlgorithmTag tag, std::span<const std::uint8_t> complexity,
                                 std::span<const std::uint8_t> rank) {
  const std::uint64_t covered = position.value_or(limit);
  if (complexity.size() != covered + 1) throw ContractViolation("complexity column length mismatch");
  if (!rank.empty() && rank.size() != covered + 1) throw ContractViolation("rank column length mismatch");
  if (position && !rank.empty()) throw ContractViolation("partial checkpoints carry no ranks");

  std::uint32_t flags = static_cast<std::uint32_t>(tag) << kTagShift;
  if (!rank.empty()) flags |= kFlagRanks;
  if (position) flags |= kFlagPartial;

  std::vector<std::uint8_t> out;
  out.reserve(32 + covered * (rank.empty() ? 1 : 2));
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put<std::uint32_t>(out, kIcxVersion);
  put<std::uint64_t>(out, limit);
  put<std::uint32_t>(out, flags);
  if (position) put<std::uint64_t>(out, *position);
  const std::size_t payload_start = out.size();
  out.insert(out.end(), complexity.begin() + 1, complexity.end());
  if (!rank.empty()) out.insert(out.end(), rank.begin() + 1, rank.end());
  const std::uint64_t checksum =
      byte_sum(std::span<const std::uint8_t>(out).subspan(payload_start));
  put<std::uint64_t>(out, checksum);
  return out;
}

[[noreturn]] void fail(IntegrityError::Kind kind, const std::string& what) {
  throw IntegrityError(kind, what);
}

}  // namespace

std::vector<std::uint8_t> encode_icx(const IcxImage& image) {
  std::span<const std::uint8_t> rank;
  if (image.rank) rank = *image.rank;
  return encode(image.limit, image.position, image.tag, image.complexity, rank);
}

std::vector<std::uint8_t> encode_icx(const ComplexityTable& table) {
  return encode(table.limit(), std::nullopt, table.tag(), table.complexities(), table.ranks());
}

IcxImage decode_icx(std::span<const std::uint8_t> bytes) {
  using Kind = IntegrityError::Kind;
  constexpr std::size_t kHeader = 4 + 4 + 8 + 4;
  if (bytes.size() < 4) fail(Kind::truncated, "file shorter than the magic number");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) fail(Kind::bad_magic, "not an ICX1 table file");
  if (bytes.size() < kHeader) fail(Kind::truncated, "header cut short");
  const auto version = get<std::uint32_t>(bytes, 4);
  if (version != kIcxVersion) {
    fail(Kind::unsupported_version, "unsupported ICX version " + std::to_string(version));
  }

  IcxImage image;
  image.limit = get<std::uint64_t>(bytes, 8);
  const auto flags = get<std::uint32_t>(bytes, 16);
  if ((flags & ~kKnownFlags) != 0) fail(Kind::malformed, "unknown flag bits set");
  const unsigned tag = (flags & kTagMask) >> kTagShift;
  if (tag > static_cast<unsigned>(AlgorithmTag::oracle)) fail(Kind::malformed, "unknown algorithm tag");
  image.tag = static_cast<AlgorithmTag>(tag);
  if (image.limit == 0) fail(Kind::malformed, "limit is zero");

  std::size_t at = kHeader;
  if (flags & kFlagPartial) {
    if (bytes.size() < at + 8) fail(Kind::truncated, "checkpoint position cut short");
    image.position = get<std::uint64_t>(bytes, at);
    at += 8;
    if (*image.position == 0 || *image.position > image.limit) {
      fail(Kind::malformed, "checkpoint position outside [1, limit]");
    }
    if (flags & kFlagRanks) fail(Kind::malformed, "partial checkpoints carry no ranks");
  }

  const std::uint64_t covered = image.covered();
  const std::uint64_t columns = (flags & kFlagRanks) ? 2 : 1;
  if (covered > (bytes.size() - at) / columns) fail(Kind::truncated, "payload cut short");
  const std::uint64_t payload = covered * columns;
  if (bytes.size() - at < payload + 8) fail(Kind::truncated, "checksum cut short");
  if (bytes.size() - at > payload + 8) fail(Kind::malformed, "trailing bytes after checksum");

  const auto body = bytes.subspan(at, payload);
  if (byte_sum(body) != get<std::uint64_t>(bytes, at + payload)) {
    fail(Kind::checksum_mismatch, "payload checksum mismatch");
  }

  image.complexity.resize(covered + 1);
  std::copy(body.begin(), body.begin() + covered, image.complexity.begin() + 1);
  if (flags & kFlagRanks) {
    image.rank.emplace(covered + 1);
    std::copy(body.begin() + covered, body.end(), image.rank->begin() + 1);
  }
  return image;
}

void write_atomically(const std::filesystem::path& path, std::span<const std::uint8_t> bytes,
                      std::uint64_t durable_position) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp.string() + " for writing", durable_position);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write to " + temp.string() + " failed", durable_position);
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move " + temp.string() + " into place at " + path.string(),
                  durable_position);
  }
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
  write_atomically(path, encode_icx(table));
}

IcxImage read_icx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string(), 0);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read of " + path.string() + " failed", 0);
  return decode_icx(bytes);
}

ComplexityTable load_table(const std::filesystem::path& path) {
  IcxImage image = read_icx(path);
  if (image.partial()) {
    throw ConfigError(path.string() + " is a partial checkpoint at position " +
                      std::to_string(*image.position) + " of " + std::to_string(image.limit) +
                      "; finish it with build --resume");
  }
  return ComplexityTable(std::move(image.complexity), std::move(image.rank), image.tag);
}

}  // namespace icx
