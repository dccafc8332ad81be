#pragma once

#include <cstdint>
#include <queue>
#include <vector>

namespace icx {

/// Incremental factorization for a strictly increasing sequence of positions.
///
/// Every prime p ≤ √limit is held as an eliminator keyed by its next multiple
/// at or after the current position; p joins the heap once the position
/// reaches p². Factoring n pops the eliminators keyed at n, divides their
/// multiplicity out, and whatever remains above 1 is the single large prime.
class EliminatorQueue {
 public:
  explicit EliminatorQueue(std::uint64_t limit);

  /// Prime factors of n with multiplicity, ascending. Calls must use strictly
  /// increasing n ≥ 2 (ContractViolation otherwise) and n ≤ limit (RangeError).
  void factorize_at(std::uint64_t n, std::vector<std::uint64_t>& out);
  std::vector<std::uint64_t> factorize_at(std::uint64_t n);

  std::uint64_t position() const noexcept { return position_; }
  std::size_t size() const noexcept { return heap_.size(); }

 private:
  struct Entry {
    std::uint64_t next;
    std::uint64_t prime;
    bool operator>(const Entry& o) const {
      return next != o.next ? next > o.next : prime > o.prime;
    }
  };

  std::uint64_t limit_;
  std::uint64_t position_ = 1;
  std::vector<std::uint64_t> primes_;
  std::size_t cursor_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

}  // namespace icx
