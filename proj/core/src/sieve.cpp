#include "icx/sieve.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {
namespace {

constexpr unsigned kSaturated = 255;

std::uint64_t physical_memory() {
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page_size = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page_size <= 0) return 0;
  return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
}

}  // namespace

Sieve::Sieve(std::uint64_t limit, const SieveOptions& options) {
  if (limit == 0) throw ConfigError("sieve limit must be at least 1");
  if (options.with_ranks && options.init_upper_bound) {
    throw ConfigError("ranks need the f[n] = n start; drop init_upper_bound");
  }
  if (limit >= 2 && complexity_upper_bound(limit) > kSaturated) {
    throw ConfigError("complexities up to limit " + std::to_string(limit) +
                      " do not fit in one byte");
  }
  const std::uint64_t need = (limit + 1) * (options.with_ranks ? 2 : 1);
  const std::uint64_t have = physical_memory();
  if (have != 0 && need > have) {
    throw ConfigError("sieve up to " + std::to_string(limit) + " needs " + std::to_string(need) +
                      " bytes but only " + std::to_string(have) +
                      " are installed; use the dp builder with checkpoints instead");
  }

  f_.resize(limit + 1);
  f_[0] = 0;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    if (options.init_upper_bound && i >= 2) {
      f_[i] = static_cast<std::uint8_t>(complexity_upper_bound(i));
    } else {
      f_[i] = static_cast<std::uint8_t>(std::min<std::uint64_t>(i, kSaturated));
    }
  }
  if (options.with_ranks) {
    rank_.assign(limit + 1, 1);
    rank_[0] = 0;
    rank_[1] = 0;
  }
  if (options.bootstrap) {
    SieveOptions exact;
    exact.bootstrap = false;
    Sieve prefix(bootstrap_prefix(limit), exact);
    prefix.run();
    addends_ = bootstrap_addends(prefix.values());
  }
}

bool Sieve::run_pass() {
  const bool changed = height_ % 2 == 0 ? multiplication_pass() : addition_pass();
  ++height_;
  quiet_passes_ = changed ? 0 : quiet_passes_ + 1;
  return changed;
}

void Sieve::run() {
  while (!converged()) run_pass();
}

// i runs over the second-largest factor, so the cofactor k ≥ i is already
// final for this pass when j = i·k is reached.
bool Sieve::multiplication_pass() {
  const std::uint64_t n = limit();
  const std::uint64_t root = isqrt(n);
  const bool ranks = !rank_.empty();
  bool changed = false;
  for (std::uint64_t i = 2; i <= root; ++i) {
    const unsigned fi = f_[i];
    for (std::uint64_t k = i, j = i * i; j <= n; ++k, j += i) {
      const unsigned cand = fi + f_[k];
      if (cand < f_[j]) {
        f_[j] = static_cast<std::uint8_t>(cand);
        if (ranks) rank_[j] = static_cast<std::uint8_t>(height_);
        changed = true;
      }
    }
  }
  return changed;
}

bool Sieve::addition_pass() {
  const std::uint64_t n = limit();
  const bool ranks = !rank_.empty();
  bool changed = false;
  for (std::uint64_t i = 2; i <= n; ++i) {
    unsigned c = f_[i];
    std::uint64_t bound = addend_bound(i, c);
    auto relax = [&](std::uint64_t j) {
      const unsigned cand = unsigned{f_[j]} + f_[i - j];
      if (cand < c) {
        c = cand;
        bound = addend_bound(i, c);
      }
    };
    if (addends_.empty()) {
      for (std::uint64_t j = 1; j <= bound; ++j) relax(j);
    } else {
      for (const std::uint64_t j : addends_) {
        if (j > bound) break;
        relax(j);
      }
    }
    if (c < f_[i]) {
      f_[i] = static_cast<std::uint8_t>(c);
      if (ranks) rank_[i] = static_cast<std::uint8_t>(height_);
      changed = true;
    }
  }
  return changed;
}

ComplexityTable Sieve::table() const {
  std::optional<std::vector<std::uint8_t>> rank;
  if (!rank_.empty()) rank = rank_;
  return ComplexityTable(f_, std::move(rank), AlgorithmTag::sieve);
}

ComplexityTable build_sieve(std::uint64_t limit, bool with_ranks) {
  SieveOptions options;
  options.with_ranks = with_ranks;
  return build_sieve(limit, options);
}

ComplexityTable build_sieve(std::uint64_t limit, const SieveOptions& options) {
  Sieve sieve(limit, options);
  sieve.run();
  return sieve.table();
}

std::vector<std::uint64_t> bootstrap_addends(std::span<const std::uint8_t> f) {
  std::vector<std::uint64_t> out;
  if (f.size() < 2) return out;
  const std::uint64_t n = f.size() - 1;
  std::vector<bool> product(n + 1, false);
  const std::uint64_t root = isqrt(n);
  for (std::uint64_t d = 2; d <= root; ++d) {
    for (std::uint64_t q = d, j = d * d; j <= n; ++q, j += d) {
      if (unsigned{f[d]} + f[q] == f[j]) product[j] = true;
    }
  }
  out.push_back(1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (product[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t bootstrap_prefix(std::uint64_t limit) {
  // Below 29 the addend is at most n/2 ≤ 14; above, a ≤ 2·n^(log₂3 − 1).
  const double exponent = std::log2(3.0) - 1.0;
  const auto growth_cap =
      static_cast<std::uint64_t>(std::ceil(2.0 * std::pow(static_cast<double>(limit), exponent))) + 1;
  return std::min(limit, std::max<std::uint64_t>(14, growth_cap));
}

}  // namespace icx
