#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "icx/analysis/sequences.hpp"
#include "icx/table.hpp"

namespace icx {

struct CollapseRecord {
  std::uint64_t p = 0;
  /// True: ‖p^k‖ < k·‖p‖ and no smaller power collapses. False: no power
  /// p^j ≤ limit collapses and k is the largest such j.
  bool collapses = false;
  unsigned k = 0;
  unsigned complexity = 0;
  std::optional<unsigned> rank;
  double logc = 0;
};

/// Every prime p < prime_bound, ascending.
std::vector<CollapseRecord> collapse_scan(const ComplexityTable& t, std::uint64_t prime_bound);

enum class FirstOp { product, sub1, sub6, sub8, sub9, sub_other };

struct FirstOpRecord {
  std::uint64_t n = 0;
  bool has_product_decomposition = false;
  /// Smallest a with ‖a‖ + ‖n−a‖ = ‖n‖.
  std::optional<std::uint64_t> minimal_addend;
  FirstOp classification = FirstOp::product;
};

const char* to_string(FirstOp op);

FirstOpRecord classify_first_operation(const ComplexityTable& t, std::uint64_t n);

struct FirstOpScan {
  /// n whose only optimal top-level operations are sums with an addend other than 1.
  std::vector<FirstOpRecord> records;
  std::uint64_t products = 0;
  std::uint64_t sub1 = 0;
};

/// Covers n = 2..limit.
FirstOpScan first_operation_scan(const ComplexityTable& t);

struct ChainRecord {
  unsigned n = 0;
  std::uint64_t end = 0;
  bool end_prime = false;
  /// quotient_prime[k−1]: (e(n) − k)/(k + 1) is an integer and prime, k = 1..3.
  std::array<bool, 3> quotient_prime{};
  /// p₁ < … < p_len = e(n) with p_{i+1} = 2·p_i + 1, maximal backwards; empty
  /// when e(n) is not prime.
  std::vector<std::uint64_t> chain;
};

/// One record per reliable e(n).
std::vector<ChainRecord> chain_scan(const SequenceSet& seq);

struct LogRecord {
  std::uint64_t n = 0;
  unsigned complexity = 0;
  double logc = 0;
  std::optional<unsigned> rank;
};

/// The `count` largest ‖n‖/log₃n over 2 ≤ n ≤ limit, descending, ties to smaller n.
std::vector<LogRecord> top_log_complexity(const ComplexityTable& t, std::size_t count);

}  // namespace icx
