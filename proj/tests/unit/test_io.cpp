#include <cstring>
#include <fstream>

#include "doctest.h"
#include "icx/errors.hpp"
#include "icx/io/icx_file.hpp"
#include "icx/sieve.hpp"
#include "shared_tables.hpp"
#include "temp_dir.hpp"

using namespace icx;

namespace {

constexpr std::size_t kHeader = 20;

IntegrityError::Kind decode_failure(const std::vector<std::uint8_t>& bytes) {
  try {
    decode_icx(bytes);
  } catch (const IntegrityError& e) {
    return e.kind();
  }
  FAIL("decode accepted damaged bytes");
  return IntegrityError::Kind::malformed;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("roundtrip with ranks is bit exact") {
  testing::TempDir dir("io");
  const auto& t = testing::shared_table();
  const auto path = dir.path / "t.icx";
  save_table(t, path);
  CHECK(load_table(path) == t);
  CHECK(std::filesystem::file_size(path) == kHeader + 2 * t.limit() + 8);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  const auto bytes = read_bytes(path);
  CHECK(std::memcmp(bytes.data(), "ICX1", 4) == 0);
  CHECK(encode_icx(load_table(path)) == bytes);
}

TEST_CASE("roundtrip without ranks keeps the algorithm tag") {
  const auto t = build_sieve(1000, false);
  const ComplexityTable dp_tagged(std::vector<std::uint8_t>(t.complexities().begin(), t.complexities().end()),
                                  std::nullopt, AlgorithmTag::dp);
  const auto image = decode_icx(encode_icx(dp_tagged));
  CHECK(image.tag == AlgorithmTag::dp);
  CHECK_FALSE(image.rank.has_value());
  CHECK_FALSE(image.partial());
}

TEST_CASE("partial images carry a position") {
  IcxImage image;
  image.limit = 100;
  image.position = 10;
  image.tag = AlgorithmTag::dp;
  image.complexity = {0, 1, 2, 3, 4, 5, 5, 6, 6, 6, 7};
  const auto bytes = encode_icx(image);
  CHECK(bytes.size() == kHeader + 8 + 10 + 8);
  const auto back = decode_icx(bytes);
  CHECK(back.partial());
  CHECK(back.covered() == 10);
  CHECK(back.complexity == image.complexity);
}

TEST_CASE("damage is classified") {
  const auto good = encode_icx(build_sieve(500, true));

  auto bad_magic = good;
  bad_magic[0] = 'J';
  CHECK(decode_failure(bad_magic) == IntegrityError::Kind::bad_magic);

  auto version = good;
  version[4] = 2;
  CHECK(decode_failure(version) == IntegrityError::Kind::unsupported_version);

  auto flipped = good;
  flipped[kHeader + 37] ^= 0x01;
  CHECK(decode_failure(flipped) == IntegrityError::Kind::checksum_mismatch);

  auto truncated = good;
  truncated.resize(truncated.size() - 9);
  CHECK(decode_failure(truncated) == IntegrityError::Kind::truncated);
  CHECK(decode_failure({'I', 'C'}) == IntegrityError::Kind::truncated);

  auto trailing = good;
  trailing.push_back(0);
  CHECK(decode_failure(trailing) == IntegrityError::Kind::malformed);

  auto flags = good;
  flags[16] |= 0x80;
  CHECK(decode_failure(flags) == IntegrityError::Kind::malformed);

  auto zero_limit = good;
  std::fill(zero_limit.begin() + 8, zero_limit.begin() + 16, 0);
  CHECK(decode_failure(zero_limit) == IntegrityError::Kind::malformed);
}

TEST_CASE("file errors") {
  testing::TempDir dir("io_err");
  CHECK_THROWS_AS(load_table(dir.path / "missing.icx"), IoError);
  CHECK_THROWS_AS(save_table(build_sieve(10, false), dir.path / "no" / "such" / "dir.icx"), IoError);
  const auto junk = dir.path / "junk.icx";
  std::ofstream(junk) << "not a table";
  CHECK_THROWS_AS(load_table(junk), IntegrityError);
}
