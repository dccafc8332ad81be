#include "icx/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {
namespace {

// Little-endian 256-bit unsigned, wide enough for n³ (n < 2^64) and 3^c (c ≤ 122).
using Wide = std::array<std::uint64_t, 4>;

void mul_small(Wide& x, std::uint64_t factor) {
  u128 carry = 0;
  for (auto& limb : x) {
    const u128 t = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<std::uint64_t>(t);
    carry = t >> 64;
  }
}

int compare(const Wide& a, const Wide& b) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

unsigned bit_width(const Wide& x) {
  for (int i = 3; i >= 0; --i) {
    if (x[i] != 0) return static_cast<unsigned>(64 * i + std::bit_width(x[i]));
  }
  return 0;
}

Wide cube(std::uint64_t n) {
  Wide w{n, 0, 0, 0};
  mul_small(w, n);
  mul_small(w, n);
  return w;
}

constexpr unsigned kPowersOfThree = 124;

const std::array<Wide, kPowersOfThree>& powers_of_three() {
  static const auto table = [] {
    std::array<Wide, kPowersOfThree> t{};
    t[0] = Wide{1, 0, 0, 0};
    for (unsigned i = 1; i < kPowersOfThree; ++i) {
      t[i] = t[i - 1];
      mul_small(t[i], 3);
    }
    return t;
  }();
  return table;
}

void require_at_least(std::uint64_t n, std::uint64_t min, const char* op) {
  if (n < min) {
    throw DomainError(std::string(op) + ": argument " + std::to_string(n) + " is below " +
                      std::to_string(min));
  }
}

const double kLn3 = std::log(3.0);

const std::array<std::uint64_t, kMaxClosedFormIndex + 1>& closed_form_table() {
  static const auto table = [] {
    std::array<std::uint64_t, kMaxClosedFormIndex + 1> t{};
    t[1] = 1;
    for (unsigned n = 2; n <= kMaxClosedFormIndex; ++n) {
      const unsigned k = (n - 2) / 3;
      std::uint64_t value = 2 + (n - 2) % 3;
      for (unsigned i = 0; i < k; ++i) value *= 3;
      t[n] = value;
    }
    return t;
  }();
  return table;
}

}  // namespace

BoundPair complexity_bounds(std::uint64_t n) {
  require_at_least(n, 2, "complexity_bounds");
  const double ln = std::log(static_cast<double>(n));
  return {3.0 * ln / kLn3, 3.0 * ln / std::log(2.0)};
}

unsigned complexity_lower_bound(std::uint64_t n) {
  require_at_least(n, 2, "complexity_lower_bound");
  const Wide target = cube(n);
  const auto& pow3 = powers_of_three();
  auto it = std::partition_point(pow3.begin(), pow3.end(),
                                 [&](const Wide& p) { return compare(p, target) < 0; });
  return static_cast<unsigned>(it - pow3.begin());
}

unsigned complexity_upper_bound(std::uint64_t n) {
  require_at_least(n, 1, "complexity_upper_bound");
  if (n == 1) return 1;
  return bit_width(cube(n)) - 1;
}

std::uint64_t e_closed(unsigned n) {
  require_at_least(n, 1, "e_closed");
  if (n > kMaxClosedFormIndex) {
    throw DomainError("e_closed: E(" + std::to_string(n) + ") exceeds 64 bits");
  }
  return closed_form_table()[n];
}

std::uint64_t e2_closed(unsigned n) {
  require_at_least(n, 8, "e2_closed");
  return static_cast<std::uint64_t>(static_cast<u128>(e_closed(n)) * 8 / 9);
}

std::uint64_t integer_logarithm(std::uint64_t n) {
  require_at_least(n, 2, "integer_logarithm");
  const auto factors = trial_factorize(n);
  return std::accumulate(factors.begin(), factors.end(), std::uint64_t{0});
}

double log_complexity(std::uint64_t n, unsigned c) {
  require_at_least(n, 2, "log_complexity");
  return c / (std::log(static_cast<double>(n)) / kLn3);
}

double defect(std::uint64_t n, unsigned c) {
  require_at_least(n, 1, "defect");
  return c - 3.0 * std::log(static_cast<double>(n)) / kLn3;
}

std::uint64_t addend_bound(std::uint64_t n, unsigned c_upper) {
  require_at_least(n, 2, "addend_bound");
  const std::uint64_t half = n / 2;
  if (c_upper == 0 || c_upper > kMaxClosedFormIndex) return half;
  const u128 square = static_cast<u128>(n) * n;
  const u128 four_e = static_cast<u128>(closed_form_table()[c_upper]) * 4;
  if (square < four_e) return half;
  const u128 disc = square - four_e;
  // Largest a with 2a ≤ n − √disc, i.e. a = ⌊(n − ⌈√disc⌉)/2⌋.
  std::uint64_t root = isqrt(disc);
  if (static_cast<u128>(root) * root < disc) ++root;
  return std::min(half, (n - root) / 2);
}

std::uint64_t mersenne_upper_bound(std::uint64_t n) {
  require_at_least(n, 2, "mersenne_upper_bound");
  return 2 * n + floor_log2(n) + hamming_weight(n) - 3;
}

}  // namespace icx
