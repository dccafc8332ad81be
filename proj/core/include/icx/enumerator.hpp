#pragma once

// Exhaustive oracle: finds ‖n‖ by searching canonical expressions with an
// increasing number of ones, and reports every shortest expression and the
// least height among them (rank).

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "icx/expr_tree.hpp"

namespace icx {

struct OracleOptions {
  /// Largest ones-count to try; defaults to ⌊3·log₂n⌋, which always suffices.
  std::optional<unsigned> ones_cap;
  /// Collect every canonical shortest expression. When false, `shortest` holds
  /// a single witness of minimum height.
  bool collect_all = true;
  /// Generate children in canonical order. Off, the generator may emit a tree
  /// several times and duplicates are removed after canonicalization.
  bool enforce_order = true;
};

struct OracleResult {
  std::uint64_t n = 0;
  unsigned complexity = 0;
  std::vector<ExprTree> shortest;
  unsigned min_height = 0;
};

/// Memoizing search over (value, ones) states. Reusing one instance across
/// many targets shares the memo; instances are not thread-safe, but separate
/// instances are independent.
class Enumerator {
 public:
  /// Throws DomainError for n = 0 and CapExceededError if no expression with at
  /// most `ones_cap` ones evaluates to n.
  OracleResult solve(std::uint64_t n, const OracleOptions& options = {});

  /// Whether some expression with exactly `ones` ones evaluates to `value`.
  bool exists(std::uint64_t value, unsigned ones);

  /// Every canonical expression with exactly `ones` ones evaluating to `value`,
  /// ascending in canonical order.
  std::vector<ExprTree> expressions(std::uint64_t value, unsigned ones, bool enforce_order = true);

  std::size_t memo_size() const noexcept { return states_.size(); }

 private:
  static constexpr std::uint8_t kNone = 0xff;

  struct State {
    std::uint8_t h_sum = kNone;   // least height among Sum-rooted expressions
    std::uint8_t h_prod = kNone;  // least height among Prod-rooted expressions
    std::uint8_t h_one = kNone;   // 0 for the literal 1
    bool any() const { return h_sum != kNone || h_prod != kNone || h_one != kNone; }
    std::uint8_t h_min() const;
    std::uint8_t h_non_sum() const { return h_prod < h_one ? h_prod : h_one; }
  };

  struct Trees {
    std::vector<ExprTree> sums;
    std::vector<ExprTree> prods;
  };

  static std::uint64_t key(std::uint64_t value, unsigned ones) { return value << 8 | ones; }

  const State& state(std::uint64_t value, unsigned ones);
  State compute(std::uint64_t value, unsigned ones);
  const Trees& trees(std::uint64_t value, unsigned ones, bool enforce_order);
  std::vector<ExprTree> all_trees(std::uint64_t value, unsigned ones, bool enforce_order);

  enum class Root { sum, prod, non_sum, any };
  ExprTree witness(std::uint64_t value, unsigned ones, Root root, unsigned max_height);

  std::unordered_map<std::uint64_t, State> states_;
  std::unordered_map<std::uint64_t, Trees> trees_[2];
};

OracleResult oracle_complexity(std::uint64_t n, const OracleOptions& options = {});

}  // namespace icx
