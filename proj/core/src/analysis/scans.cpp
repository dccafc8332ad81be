#include "icx/analysis/scans.hpp"

#include <algorithm>
#include <queue>

#include "icx/bounds.hpp"
#include "icx/number_theory.hpp"

namespace icx {

std::vector<CollapseRecord> collapse_scan(const ComplexityTable& t, std::uint64_t prime_bound) {
  std::vector<CollapseRecord> out;
  if (prime_bound < 3) return out;
  for (const std::uint64_t p : primes_up_to(std::min(prime_bound - 1, t.limit()))) {
    CollapseRecord rec;
    rec.p = p;
    rec.complexity = t[p];
    if (t.has_ranks()) rec.rank = t.rank(p);
    rec.logc = log_complexity(p, t[p]);
    rec.k = 1;
    std::uint64_t power = p;
    for (unsigned k = 2; power <= t.limit() / p; ++k) {
      power *= p;
      rec.k = k;
      if (t[power] < k * rec.complexity) {
        rec.collapses = true;
        break;
      }
    }
    out.push_back(rec);
  }
  return out;
}

const char* to_string(FirstOp op) {
  switch (op) {
    case FirstOp::product:
      return "product";
    case FirstOp::sub1:
      return "sub1";
    case FirstOp::sub6:
      return "sub6";
    case FirstOp::sub8:
      return "sub8";
    case FirstOp::sub9:
      return "sub9";
    case FirstOp::sub_other:
      return "sub_other";
  }
  return "unknown";
}

namespace {

std::optional<std::uint64_t> minimal_addend(const ComplexityTable& t, std::uint64_t n) {
  const unsigned c = t[n];
  const std::uint64_t bound = addend_bound(n, c);
  for (std::uint64_t a = 1; a <= bound; ++a) {
    if (t[a] + t[n - a] == c) return a;
  }
  return std::nullopt;
}

FirstOp classify(bool product, std::optional<std::uint64_t> addend) {
  if (product) return FirstOp::product;
  switch (addend.value_or(0)) {
    case 1:
      return FirstOp::sub1;
    case 6:
      return FirstOp::sub6;
    case 8:
      return FirstOp::sub8;
    case 9:
      return FirstOp::sub9;
    default:
      return FirstOp::sub_other;
  }
}

}  // namespace

FirstOpRecord classify_first_operation(const ComplexityTable& t, std::uint64_t n) {
  FirstOpRecord rec;
  rec.n = n;
  const std::uint64_t root = isqrt(n);
  for (std::uint64_t d = 2; d <= root && !rec.has_product_decomposition; ++d) {
    rec.has_product_decomposition = n % d == 0 && t[d] + t[n / d] == t[n];
  }
  if (n >= 2) rec.minimal_addend = minimal_addend(t, n);
  rec.classification = classify(rec.has_product_decomposition, rec.minimal_addend);
  return rec;
}

FirstOpScan first_operation_scan(const ComplexityTable& t) {
  const std::uint64_t limit = t.limit();
  std::vector<bool> product(limit + 1, false);
  const std::uint64_t root = isqrt(limit);
  for (std::uint64_t d = 2; d <= root; ++d) {
    for (std::uint64_t q = d, m = d * d; m <= limit; ++q, m += d) {
      if (t[d] + t[q] == t[m]) product[m] = true;
    }
  }
  FirstOpScan scan;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (product[n]) {
      ++scan.products;
      continue;
    }
    if (t[1] + t[n - 1] == t[n]) {
      ++scan.sub1;
      continue;
    }
    FirstOpRecord rec;
    rec.n = n;
    rec.minimal_addend = minimal_addend(t, n);
    rec.classification = classify(false, rec.minimal_addend);
    scan.records.push_back(rec);
  }
  return scan;
}

std::vector<ChainRecord> chain_scan(const SequenceSet& seq) {
  std::vector<ChainRecord> out;
  for (const auto& [n, entry] : seq.e) {
    if (!entry.reliable) continue;
    ChainRecord rec;
    rec.n = n;
    rec.end = entry.value;
    rec.end_prime = is_prime(entry.value);
    for (unsigned k = 1; k <= 3; ++k) {
      const std::uint64_t e = entry.value;
      rec.quotient_prime[k - 1] = e > k && (e - k) % (k + 1) == 0 && is_prime((e - k) / (k + 1));
    }
    for (std::uint64_t p = entry.value; is_prime(p);) {
      rec.chain.push_back(p);
      if (p % 2 == 0) break;
      p = (p - 1) / 2;
    }
    std::reverse(rec.chain.begin(), rec.chain.end());
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LogRecord> top_log_complexity(const ComplexityTable& t, std::size_t count) {
  // Min-heap on (logc, −n): the top is the weakest of the current best.
  auto weaker = [](const LogRecord& a, const LogRecord& b) {
    return a.logc != b.logc ? a.logc > b.logc : a.n < b.n;
  };
  std::priority_queue<LogRecord, std::vector<LogRecord>, decltype(weaker)> heap(weaker);
  if (count == 0) return {};
  for (std::uint64_t n = 2; n <= t.limit(); ++n) {
    LogRecord rec{n, t[n], log_complexity(n, t[n]), std::nullopt};
    if (heap.size() < count) {
      heap.push(rec);
    } else if (weaker(rec, heap.top())) {
      heap.pop();
      heap.push(rec);
    }
  }
  std::vector<LogRecord> out;
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::reverse(out.begin(), out.end());
  if (t.has_ranks()) {
    for (auto& rec : out) rec.rank = t.rank(rec.n);
  }
  return out;
}

}  // namespace icx
