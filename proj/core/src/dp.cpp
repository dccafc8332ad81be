#include "icx/dp.hpp"

#include <algorithm>
#include <string>

#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/io/icx_file.hpp"
#include "icx/number_theory.hpp"

namespace icx {

DpBuilder::DpBuilder(std::uint64_t limit, DpOptions options)
    : DpBuilder(limit, std::move(options), std::vector<std::uint8_t>{0, 1}) {}

DpBuilder::DpBuilder(std::uint64_t limit, DpOptions options, std::vector<std::uint8_t> prefix)
    : limit_(limit), options_(std::move(options)), f_(std::move(prefix)), queue_(limit) {
  if (limit == 0) throw ConfigError("dp limit must be at least 1");
  if (options_.checkpoint_every != 0 && options_.checkpoint_path.empty()) {
    throw ConfigError("checkpoint_every needs a checkpoint path");
  }
  if (options_.first_sum_addend == 0) throw ConfigError("first_sum_addend must be positive");
  f_.reserve(limit + 1);
}

DpBuilder DpBuilder::resume(const std::filesystem::path& checkpoint, std::uint64_t limit,
                            DpOptions options) {
  IcxImage image = read_icx(checkpoint);
  if (!image.partial()) {
    throw ConfigError(checkpoint.string() + " is a complete table, not a checkpoint");
  }
  if (limit <= image.covered()) {
    throw ConfigError("limit " + std::to_string(limit) + " does not extend checkpoint position " +
                      std::to_string(image.covered()));
  }
  const std::uint64_t position = image.covered();
  DpBuilder builder(limit, std::move(options), std::move(image.complexity));
  builder.durable_ = position;
  return builder;
}

void DpBuilder::step() {
  const std::uint64_t n = f_.size();
  unsigned c = 1u + f_[n - 1];

  queue_.factorize_at(n, factors_);
  small_divisors(n, factors_, divisors_);
  for (const std::uint64_t d : divisors_) c = std::min(c, unsigned{f_[d]} + f_[n / d]);

  std::uint64_t bound = addend_bound(n, c);
  for (std::uint64_t a = options_.first_sum_addend; a <= bound; ++a) {
    const unsigned cand = unsigned{f_[a]} + f_[n - a];
    if (cand < c) {
      c = cand;
      bound = addend_bound(n, c);
    }
  }
  f_.push_back(static_cast<std::uint8_t>(c));
}

void DpBuilder::advance_to(std::uint64_t n) {
  if (n > limit_) {
    throw RangeError("advance_to(" + std::to_string(n) + ") beyond limit " + std::to_string(limit_));
  }
  const std::uint64_t every = options_.checkpoint_every;
  while (position() < n) {
    step();
    if (every != 0 && position() % every == 0 && position() < limit_) {
      write_checkpoint(options_.checkpoint_path);
    }
  }
}

void DpBuilder::write_checkpoint(const std::filesystem::path& path) {
  IcxImage image;
  image.limit = limit_;
  image.position = position();
  image.tag = AlgorithmTag::dp;
  image.complexity = f_;
  write_atomically(path, encode_icx(image), durable_);
  durable_ = position();
}

ComplexityTable DpBuilder::finish() {
  advance_to(limit_);
  return ComplexityTable(std::move(f_), std::nullopt, AlgorithmTag::dp);
}

ComplexityTable build_dp(std::uint64_t limit, const DpOptions& options) {
  DpBuilder builder(limit, options);
  return builder.finish();
}

ComplexityTable resume_dp(const std::filesystem::path& checkpoint, std::uint64_t limit,
                          const DpOptions& options) {
  if (limit == 0) throw ConfigError("dp limit must be at least 1");
  IcxImage image = read_icx(checkpoint);
  if (image.partial() && limit <= image.covered()) {
    image.complexity.resize(limit + 1);
    return ComplexityTable(std::move(image.complexity), std::nullopt, AlgorithmTag::dp);
  }
  return DpBuilder::resume(checkpoint, limit, options).finish();
}

}  // namespace icx
