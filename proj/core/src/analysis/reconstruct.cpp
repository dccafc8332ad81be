#include "icx/analysis/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {
namespace {

constexpr unsigned kNone = 0xff;

void check_range(const ComplexityTable& t, std::uint64_t n) {
  if (n == 0 || n > t.limit()) {
    throw RangeError("n = " + std::to_string(n) + " outside table range [1, " +
                     std::to_string(t.limit()) + "]");
  }
}

// Optimal splits of v, in tie-break order.
template <typename Fn>
bool for_each_factor_split(const ComplexityTable& t, std::uint64_t v, Fn&& fn) {
  const unsigned c = t[v];
  const std::uint64_t root = isqrt(v);
  for (std::uint64_t d = 2; d <= root; ++d) {
    if (v % d == 0 && t[d] + t[v / d] == c && fn(d)) return true;
  }
  return false;
}

template <typename Fn>
bool for_each_sum_split(const ComplexityTable& t, std::uint64_t v, Fn&& fn) {
  const unsigned c = t[v];
  const std::uint64_t bound = addend_bound(v, c);
  for (std::uint64_t a = 1; a <= bound; ++a) {
    if (t[a] + t[v - a] == c && fn(a)) return true;
  }
  return false;
}

ExprTree any_tree(const ComplexityTable& t, std::uint64_t v) {
  if (v == 1) return ExprTree::one();
  std::uint64_t d = 0;
  if (for_each_factor_split(t, v, [&](std::uint64_t x) { return d = x, true; })) {
    return ExprTree::product({any_tree(t, d), any_tree(t, v / d)});
  }
  std::uint64_t a = 0;
  if (for_each_sum_split(t, v, [&](std::uint64_t x) { return a = x, true; })) {
    return ExprTree::sum({any_tree(t, a), any_tree(t, v - a)});
  }
  throw ContractViolation("table entry for " + std::to_string(v) + " has no optimal split");
}

// Least heights of shortest Sum- and Prod-rooted expressions, memoized by value.
// Recursion depth is bounded by ‖v‖ since every step strictly lowers it.
class Heights {
 public:
  explicit Heights(const ComplexityTable& t) : t_(t) {}

  struct Pair {
    unsigned sum = kNone;
    unsigned prod = kNone;
    unsigned min() const { return std::min(sum, prod); }
  };

  unsigned non_sum(std::uint64_t v) { return v == 1 ? 0 : get(v).prod; }
  unsigned any(std::uint64_t v) { return v == 1 ? 0 : get(v).min(); }

  const Pair& get(std::uint64_t v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    Pair p;
    for_each_factor_split(t_, v, [&](std::uint64_t d) {
      const unsigned hd = get(d).sum;
      const Pair& q = get(v / d);
      if (hd == kNone) return false;
      if (q.prod != kNone) p.prod = std::min(p.prod, std::max(hd + 1, q.prod));
      if (q.sum != kNone) p.prod = std::min(p.prod, 1 + std::max(hd, q.sum));
      return false;
    });
    for_each_sum_split(t_, v, [&](std::uint64_t a) {
      const unsigned ha = non_sum(a);
      if (ha == kNone) return false;
      const std::uint64_t b = v - a;
      if (b != 1 && get(b).sum != kNone) p.sum = std::min(p.sum, std::max(ha + 1, get(b).sum));
      const unsigned hb = non_sum(b);
      if (hb != kNone) p.sum = std::min(p.sum, 1 + std::max(ha, hb));
      return false;
    });
    return memo_.emplace(v, p).first->second;
  }

  enum class Root { sum, prod, non_sum, any };

  ExprTree build(std::uint64_t v, Root root, unsigned h) {
    if (v == 1) return ExprTree::one();
    const Pair p = get(v);
    std::optional<ExprTree> out;
    if (root != Root::sum && p.prod <= h) {
      for_each_factor_split(t_, v, [&](std::uint64_t d) {
        const unsigned hd = get(d).sum;
        if (hd == kNone || hd + 1 > h) return false;
        const Pair q = get(v / d);
        if (q.prod != kNone && q.prod <= h) {
          out = ExprTree::product({build(d, Root::sum, h - 1), build(v / d, Root::prod, h)});
          return true;
        }
        if (q.sum != kNone && q.sum + 1 <= h) {
          out = ExprTree::product({build(d, Root::sum, h - 1), build(v / d, Root::sum, h - 1)});
          return true;
        }
        return false;
      });
      if (out) return *out;
    }
    if ((root == Root::sum || root == Root::any) && p.sum <= h) {
      for_each_sum_split(t_, v, [&](std::uint64_t a) {
        const unsigned ha = non_sum(a);
        if (ha == kNone || ha + 1 > h) return false;
        const std::uint64_t b = v - a;
        if (b != 1 && get(b).sum <= h) {
          out = ExprTree::sum({build(a, Root::non_sum, h - 1), build(b, Root::sum, h)});
          return true;
        }
        if (non_sum(b) + 1 <= h) {
          out = ExprTree::sum({build(a, Root::non_sum, h - 1), build(b, Root::non_sum, h - 1)});
          return true;
        }
        return false;
      });
      if (out) return *out;
    }
    throw ContractViolation("no shortest expression of " + std::to_string(v) + " within height " +
                            std::to_string(h));
  }

 private:
  const ComplexityTable& t_;
  std::unordered_map<std::uint64_t, Pair> memo_;
};

}  // namespace

ExprTree reconstruct(const ComplexityTable& table, std::uint64_t n, ReconstructPolicy policy) {
  check_range(table, n);
  if (policy == ReconstructPolicy::any_shortest) return any_tree(table, n);
  Heights heights(table);
  return heights.build(n, Heights::Root::any, heights.any(n));
}

unsigned shortest_height(const ComplexityTable& table, std::uint64_t n) {
  check_range(table, n);
  Heights heights(table);
  return heights.any(n);
}

}  // namespace icx
