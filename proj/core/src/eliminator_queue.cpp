#include "icx/eliminator_queue.hpp"

#include <string>

#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {

EliminatorQueue::EliminatorQueue(std::uint64_t limit)
    : limit_(limit), primes_(primes_up_to(isqrt(limit))) {}

void EliminatorQueue::factorize_at(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n < 2 || n <= position_) {
    throw ContractViolation("factorize_at(" + std::to_string(n) + ") after position " +
                            std::to_string(position_));
  }
  if (n > limit_) {
    throw RangeError("factorize_at(" + std::to_string(n) + ") beyond limit " +
                     std::to_string(limit_));
  }
  position_ = n;
  out.clear();

  while (cursor_ < primes_.size() && primes_[cursor_] * primes_[cursor_] <= n) {
    const std::uint64_t p = primes_[cursor_++];
    heap_.push({(n + p - 1) / p * p, p});
  }
  // Entries left behind by a skipped stretch of positions catch up here.
  while (!heap_.empty() && heap_.top().next < n) {
    Entry e = heap_.top();
    heap_.pop();
    e.next = (n + e.prime - 1) / e.prime * e.prime;
    heap_.push(e);
  }

  std::uint64_t rest = n;
  while (!heap_.empty() && heap_.top().next == n) {
    Entry e = heap_.top();
    heap_.pop();
    do {
      out.push_back(e.prime);
      rest /= e.prime;
    } while (rest % e.prime == 0);
    e.next += e.prime;
    heap_.push(e);
  }
  if (rest > 1) out.push_back(rest);
}

std::vector<std::uint64_t> EliminatorQueue::factorize_at(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  factorize_at(n, out);
  return out;
}

}  // namespace icx
