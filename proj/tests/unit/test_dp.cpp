#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "icx/dp.hpp"
#include "icx/errors.hpp"
#include "icx/io/icx_file.hpp"
#include "reference_values.hpp"
#include "shared_tables.hpp"
#include "temp_dir.hpp"

using namespace icx;
namespace fs = std::filesystem;

namespace {

bool same_complexities(const ComplexityTable& a, const ComplexityTable& b) {
  return std::equal(a.complexities().begin(), a.complexities().end(), b.complexities().begin(),
                    b.complexities().end());
}

}  // namespace

TEST_CASE("first values and examples") {
  const auto t = build_dp(15);
  for (unsigned n = 1; n <= 15; ++n) CHECK(t.complexity(n) == reference::kFirstComplexities[n - 1]);
  CHECK(t.tag() == AlgorithmTag::dp);
  CHECK_FALSE(t.has_ranks());
  const auto big = build_dp(20'000);
  CHECK(big.complexity(15625) == 29);
  CHECK(big.complexity(121) == 15);
}

TEST_CASE("agrees with the sieve") {
  CHECK(same_complexities(build_dp(testing::kSharedLimit), testing::shared_table()));
}

TEST_CASE("starting the sum scan at 1 changes nothing") {
  DpOptions full;
  full.first_sum_addend = 1;
  CHECK(build_dp(testing::kSharedLimit, full) == build_dp(testing::kSharedLimit));
}

TEST_CASE("checkpoints and resume") {
  testing::TempDir dir("dp");
  const auto ckpt = dir.path / "build.ckpt";
  DpOptions options;
  options.checkpoint_every = 10'000;
  options.checkpoint_path = ckpt;

  DpBuilder builder(50'000, options);
  builder.advance_to(25'000);
  CHECK(builder.position() == 25'000);
  CHECK(builder.durable_position() == 20'000);

  const auto image = read_icx(ckpt);
  CHECK(image.partial());
  CHECK(image.covered() == 20'000);
  CHECK(image.limit == 50'000);

  const auto one_shot = build_dp(50'000);
  CHECK(resume_dp(ckpt, 50'000, options) == one_shot);
  CHECK(resume_dp(ckpt, 12'345) == one_shot.prefix(12'345));
  CHECK(resume_dp(ckpt, 80'000) == build_dp(80'000));
  CHECK_THROWS_AS(load_table(ckpt), ConfigError);
}

TEST_CASE("resume rejects complete tables and damaged files") {
  testing::TempDir dir("dp");
  const auto full = dir.path / "full.icx";
  save_table(build_dp(100), full);
  CHECK_THROWS_AS(DpBuilder::resume(full, 200), ConfigError);

  const auto ckpt = dir.path / "p.ckpt";
  DpBuilder builder(1000);
  builder.advance_to(500);
  builder.write_checkpoint(ckpt);
  CHECK(builder.durable_position() == 500);
  CHECK_THROWS_AS(DpBuilder::resume(ckpt, 400), ConfigError);
  {
    std::fstream f(ckpt, std::ios::in | std::ios::out | std::ios::binary);
    f.put('X');
  }
  CHECK_THROWS_AS(resume_dp(ckpt, 1000), IntegrityError);
}

TEST_CASE("advance_to contracts") {
  DpBuilder builder(100);
  CHECK_THROWS_AS(builder.advance_to(101), RangeError);
  builder.advance_to(100);
  CHECK(builder.finish() == build_dp(100));
  CHECK_THROWS_AS(DpBuilder(0), ConfigError);
}

TEST_CASE("unwritable checkpoint surfaces the durable position") {
  DpOptions options;
  options.checkpoint_every = 100;
  options.checkpoint_path = "/nonexistent-dir/sub/x.ckpt";
  DpBuilder builder(1000, options);
  try {
    builder.advance_to(1000);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.durable_position() == 0);
  }
}
