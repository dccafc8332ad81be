#pragma once

#include <cstdint>

#include "icx/expr_tree.hpp"
#include "icx/table.hpp"

namespace icx {

enum class ReconstructPolicy {
  /// Any expression with ‖n‖ ones.
  any_shortest,
  /// A shortest expression of least height, i.e. one realizing rank(n).
  min_height,
};

/// Rebuilds a canonical shortest expression for n from the table alone.
/// Ties prefer a product over a sum, the smallest factor among products and
/// the smallest addend among sums. Throws RangeError outside [1, limit].
ExprTree reconstruct(const ComplexityTable& table, std::uint64_t n, ReconstructPolicy policy);

/// Least height among shortest expressions of n, computed from complexities
/// only. Agrees with the rank column where one exists.
unsigned shortest_height(const ComplexityTable& table, std::uint64_t n);

}  // namespace icx
