#include "icx/enumerator.hpp"

#include <algorithm>
#include <string>

#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {
namespace {

// Fewest ones any expression for v can use.
unsigned min_ones(std::uint64_t v) { return v == 1 ? 1 : complexity_lower_bound(v); }

// No expression with `ones` ones can exceed E(ones).
bool within_closed_form(std::uint64_t v, unsigned ones) {
  return ones > kMaxClosedFormIndex || v <= e_closed(ones);
}

const ExprTree& smallest_child(const ExprTree& t, ExprTree::Kind merged_kind) {
  return t.kind() == merged_kind ? t.children().front() : t;
}

}  // namespace

std::uint8_t Enumerator::State::h_min() const {
  return std::min({h_sum, h_prod, h_one});
}

const Enumerator::State& Enumerator::state(std::uint64_t value, unsigned ones) {
  const auto k = key(value, ones);
  if (auto it = states_.find(k); it != states_.end()) return it->second;
  State s = compute(value, ones);
  return states_.emplace(k, s).first->second;
}

Enumerator::State Enumerator::compute(std::uint64_t v, unsigned k) {
  State s;
  if (v == 1) {
    if (k == 1) s.h_one = 0;
    return s;
  }
  if (k < 2 || k < min_ones(v) || !within_closed_form(v, k)) return s;

  auto improve = [](std::uint8_t& slot, unsigned h) {
    if (h < slot) slot = static_cast<std::uint8_t>(h);
  };

  // Sum root: split off the smallest child a (never a Sum); the rest b merges in.
  const std::uint64_t a_max = addend_bound(v, k);
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    const std::uint64_t b = v - a;
    const unsigned lo = min_ones(a);
    const unsigned reserve = min_ones(b);
    if (lo + reserve > k) continue;
    for (unsigned ka = lo; ka <= k - reserve; ++ka) {
      const unsigned kb = k - ka;
      if (!within_closed_form(a, ka) || !within_closed_form(b, kb)) continue;
      const std::uint8_t ha = a == 1 ? (ka == 1 ? 0 : kNone) : state(a, ka).h_prod;
      if (ha == kNone) continue;
      const State& rest = state(b, kb);
      if (rest.h_sum != kNone) improve(s.h_sum, std::max<unsigned>(ha + 1, rest.h_sum));
      if (rest.h_non_sum() != kNone) improve(s.h_sum, 1 + std::max(ha, rest.h_non_sum()));
    }
  }

  // Prod root: split off the smallest factor d (never a Prod); the cofactor merges in.
  const std::uint64_t root = isqrt(v);
  for (std::uint64_t d = 2; d <= root; ++d) {
    if (v % d != 0) continue;
    const std::uint64_t q = v / d;
    const unsigned lo = min_ones(d);
    const unsigned reserve = min_ones(q);
    if (lo + reserve > k) continue;
    for (unsigned kd = lo; kd <= k - reserve; ++kd) {
      const unsigned kq = k - kd;
      if (!within_closed_form(d, kd) || !within_closed_form(q, kq)) continue;
      const std::uint8_t hd = state(d, kd).h_sum;
      if (hd == kNone) continue;
      const State& rest = state(q, kq);
      if (rest.h_prod != kNone) improve(s.h_prod, std::max<unsigned>(hd + 1, rest.h_prod));
      if (rest.h_sum != kNone) improve(s.h_prod, 1 + std::max(hd, rest.h_sum));
    }
  }
  return s;
}

bool Enumerator::exists(std::uint64_t value, unsigned ones) {
  if (value == 0) throw DomainError("expressions over {1,+,*} have positive values");
  return ones > 0 && state(value, ones).any();
}

std::vector<ExprTree> Enumerator::all_trees(std::uint64_t value, unsigned ones,
                                            bool enforce_order) {
  std::vector<ExprTree> out;
  if (value == 1) {
    if (ones == 1) out.push_back(ExprTree::one());
    return out;
  }
  const Trees& t = trees(value, ones, enforce_order);
  out.reserve(t.sums.size() + t.prods.size());
  out.insert(out.end(), t.sums.begin(), t.sums.end());
  out.insert(out.end(), t.prods.begin(), t.prods.end());
  return out;
}

const Enumerator::Trees& Enumerator::trees(std::uint64_t v, unsigned k, bool enforce_order) {
  auto& cache = trees_[enforce_order ? 1 : 0];
  const auto cache_key = key(v, k);
  if (auto it = cache.find(cache_key); it != cache.end()) return it->second;

  Trees out;
  const State& s = state(v, k);
  if (v >= 2 && s.any()) {
    if (s.h_sum != kNone) {
      const std::uint64_t a_max = addend_bound(v, k);
      for (std::uint64_t a = 1; a <= a_max; ++a) {
        const std::uint64_t b = v - a;
        const unsigned lo = min_ones(a);
        const unsigned reserve = min_ones(b);
        if (lo + reserve > k) continue;
        for (unsigned ka = lo; ka <= k - reserve; ++ka) {
          const unsigned kb = k - ka;
          if (!within_closed_form(a, ka) || !within_closed_form(b, kb)) continue;
          std::vector<ExprTree> firsts;
          if (a == 1) {
            if (ka == 1) firsts.push_back(ExprTree::one());
          } else if (state(a, ka).h_prod != kNone) {
            firsts = trees(a, ka, enforce_order).prods;
          }
          if (firsts.empty() || !state(b, kb).any()) continue;
          const auto rests = all_trees(b, kb, enforce_order);
          for (const auto& first : firsts) {
            for (const auto& rest : rests) {
              if (enforce_order && smallest_child(rest, ExprTree::Kind::sum) < first) continue;
              out.sums.push_back(ExprTree::sum({first, rest}));
            }
          }
        }
      }
    }
    if (s.h_prod != kNone) {
      const std::uint64_t root = isqrt(v);
      for (std::uint64_t d = 2; d <= root; ++d) {
        if (v % d != 0) continue;
        const std::uint64_t q = v / d;
        const unsigned lo = min_ones(d);
        const unsigned reserve = min_ones(q);
        if (lo + reserve > k) continue;
        for (unsigned kd = lo; kd <= k - reserve; ++kd) {
          const unsigned kq = k - kd;
          if (!within_closed_form(d, kd) || !within_closed_form(q, kq)) continue;
          if (state(d, kd).h_sum == kNone || !state(q, kq).any()) continue;
          const auto firsts = trees(d, kd, enforce_order).sums;
          const auto rests = all_trees(q, kq, enforce_order);
          for (const auto& first : firsts) {
            for (const auto& rest : rests) {
              if (enforce_order && smallest_child(rest, ExprTree::Kind::prod) < first) continue;
              out.prods.push_back(ExprTree::product({first, rest}));
            }
          }
        }
      }
    }
  }
  for (auto* list : {&out.sums, &out.prods}) {
    std::sort(list->begin(), list->end());
    if (!enforce_order) list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return cache.emplace(cache_key, std::move(out)).first->second;
}

std::vector<ExprTree> Enumerator::expressions(std::uint64_t value, unsigned ones,
                                              bool enforce_order) {
  if (value == 0) throw DomainError("expressions over {1,+,*} have positive values");
  if (ones == 0) return {};
  auto out = all_trees(value, ones, enforce_order);
  std::sort(out.begin(), out.end());
  return out;
}

ExprTree Enumerator::witness(std::uint64_t v, unsigned k, Root root, unsigned max_height) {
  if (v == 1) return ExprTree::one();
  const State& s = state(v, k);
  const bool want_sum = root == Root::sum || root == Root::any;
  const bool want_prod = root != Root::sum;

  if (want_prod && s.h_prod != kNone && s.h_prod <= max_height) {
    const std::uint64_t r = isqrt(v);
    for (std::uint64_t d = 2; d <= r; ++d) {
      if (v % d != 0) continue;
      const std::uint64_t q = v / d;
      const unsigned lo = min_ones(d);
      const unsigned reserve = min_ones(q);
      if (lo + reserve > k) continue;
      for (unsigned kd = lo; kd <= k - reserve; ++kd) {
        const unsigned kq = k - kd;
        if (!within_closed_form(d, kd) || !within_closed_form(q, kq)) continue;
        const std::uint8_t hd = state(d, kd).h_sum;
        if (hd == kNone) continue;
        const State& rest = state(q, kq);
        if (rest.h_prod != kNone && std::max<unsigned>(hd + 1, rest.h_prod) <= max_height) {
          return ExprTree::product({witness(d, kd, Root::sum, max_height - 1),
                                    witness(q, kq, Root::prod, max_height)});
        }
        if (rest.h_sum != kNone && 1u + std::max(hd, rest.h_sum) <= max_height) {
          return ExprTree::product({witness(d, kd, Root::sum, max_height - 1),
                                    witness(q, kq, Root::sum, max_height - 1)});
        }
      }
    }
  }
  if (want_sum && s.h_sum != kNone && s.h_sum <= max_height) {
    const std::uint64_t a_max = addend_bound(v, k);
    for (std::uint64_t a = 1; a <= a_max; ++a) {
      const std::uint64_t b = v - a;
      const unsigned lo = min_ones(a);
      const unsigned reserve = min_ones(b);
      if (lo + reserve > k) continue;
      for (unsigned ka = lo; ka <= k - reserve; ++ka) {
        const unsigned kb = k - ka;
        if (!within_closed_form(a, ka) || !within_closed_form(b, kb)) continue;
        const std::uint8_t ha = a == 1 ? (ka == 1 ? 0 : kNone) : state(a, ka).h_prod;
        if (ha == kNone) continue;
        const State& rest = state(b, kb);
        if (rest.h_sum != kNone && std::max<unsigned>(ha + 1, rest.h_sum) <= max_height) {
          return ExprTree::sum({witness(a, ka, Root::non_sum, max_height - 1),
                                witness(b, kb, Root::sum, max_height)});
        }
        if (rest.h_non_sum() != kNone && 1u + std::max(ha, rest.h_non_sum()) <= max_height) {
          return ExprTree::sum({witness(a, ka, Root::non_sum, max_height - 1),
                                witness(b, kb, Root::non_sum, max_height - 1)});
        }
      }
    }
  }
  throw ContractViolation("no expression of value " + std::to_string(v) + " with " +
                          std::to_string(k) + " ones fits height " + std::to_string(max_height));
}

OracleResult Enumerator::solve(std::uint64_t n, const OracleOptions& options) {
  if (n == 0) throw DomainError("oracle_complexity: n must be positive");
  const unsigned cap = options.ones_cap.value_or(complexity_upper_bound(n));
  for (unsigned k = min_ones(n); k <= cap; ++k) {
    const State& s = state(n, k);
    if (!s.any()) continue;
    OracleResult result;
    result.n = n;
    result.complexity = k;
    result.min_height = s.h_min();
    if (options.collect_all) {
      result.shortest = expressions(n, k, options.enforce_order);
    } else {
      result.shortest.push_back(witness(n, k, Root::any, result.min_height));
    }
    return result;
  }
  throw CapExceededError("no expression for " + std::to_string(n) + " with at most " +
                         std::to_string(cap) + " ones");
}

OracleResult oracle_complexity(std::uint64_t n, const OracleOptions& options) {
  Enumerator enumerator;
  return enumerator.solve(n, options);
}

}  // namespace icx
