#include "icx/analysis/hypotheses.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "icx/analysis/reporting.hpp"
#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/number_theory.hpp"

namespace icx {
namespace {

constexpr std::size_t kMaxRows = 200;

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Collects failures; only the first kMaxRows become rows.
struct Failures {
  Report& report;
  std::uint64_t count = 0;

  void add(std::vector<Cell> row) {
    ++count;
    report.holds = false;
    if (report.rows.size() < kMaxRows) report.add_row(std::move(row));
  }
  void finish() { report.add_stat("counterexamples", as_int(count)); }
};

// Largest e with base^e ≤ limit, walking the powers.
template <typename Fn>
void for_each_power(std::uint64_t base, std::uint64_t limit, Fn&& fn) {
  std::uint64_t value = 1;
  for (unsigned e = 1; value <= limit / base; ++e) {
    value *= base;
    fn(e, value);
  }
}

}  // namespace

Report check_bounds(const ComplexityTable& t) {
  Report report = table_report("bounds", t);
  report.columns = {"n", "property", "detail"};
  Failures fail{report};
  const std::uint64_t limit = t.limit();

  if (t[1] != 1) fail.add({std::int64_t{1}, std::string("one"), "complexity " + std::to_string(t[1])});
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const unsigned c = t[n];
    const unsigned lo = complexity_lower_bound(n);
    const unsigned hi = complexity_upper_bound(n);
    if (c < lo || c > hi) {
      fail.add({as_int(n), std::string("log bounds"),
                std::to_string(c) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"});
    }
    if (c > t[n - 1] + 1u) fail.add({as_int(n), std::string("successor"), std::to_string(c)});
    if (c <= kMaxClosedFormIndex && n > e_closed(c)) {
      fail.add({as_int(n), std::string("largest value"), "exceeds E(" + std::to_string(c) + ")"});
    }
  }
  const std::uint64_t root = isqrt(limit);
  for (std::uint64_t a = 2; a <= root; ++a) {
    for (std::uint64_t b = a, ab = a * a; ab <= limit; ++b, ab += a) {
      if (t[ab] > t[a] + t[b]) {
        fail.add({as_int(ab), std::string("submultiplicative"),
                  std::to_string(a) + "*" + std::to_string(b)});
      }
    }
  }
  for_each_power(3, limit, [&](unsigned b, std::uint64_t v) {
    if (t[v] != 3 * b) fail.add({as_int(v), std::string("power of three"), std::to_string(t[v])});
  });
  if (t.has_ranks()) {
    if (t.rank(1) != 0) fail.add({std::int64_t{1}, std::string("rank"), std::string("rank(1) != 0")});
    for (std::uint64_t n = 2; n <= limit; ++n) {
      const unsigned r = t.rank(n);
      if (r == 0 || (r == 1) != (n <= 5)) {
        fail.add({as_int(n), std::string("rank"), "rank " + std::to_string(r)});
      }
    }
  }
  fail.finish();
  return report;
}

Report check_products(const ComplexityTable& t, ProductKind kind) {
  const std::uint64_t limit = t.limit();
  const char* name = kind == ProductKind::pow2 ? "pow2" : kind == ProductKind::pow3 ? "pow3" : "pow235";
  Report report = table_report(name, t);
  report.columns = {"n", "a", "b", "c", "expected", "complexity"};
  Failures fail{report};
  std::uint64_t checked = 0;
  unsigned max_exponent = 0;

  auto check = [&](std::uint64_t v, unsigned a, unsigned b, unsigned c) {
    ++checked;
    const unsigned expected = 2 * a + 3 * b + 5 * c;
    if (t[v] != expected) {
      fail.add({as_int(v), std::int64_t{a}, std::int64_t{b}, std::int64_t{c}, std::int64_t{expected},
                std::int64_t{t[v]}});
    }
  };

  if (kind == ProductKind::pow2) {
    for_each_power(2, limit, [&](unsigned a, std::uint64_t v) {
      check(v, a, 0, 0);
      max_exponent = a;
    });
  } else if (kind == ProductKind::pow3) {
    for_each_power(3, limit, [&](unsigned b, std::uint64_t v) {
      check(v, 0, b, 0);
      max_exponent = b;
    });
  } else {
    std::uint64_t p5 = 1;
    for (unsigned c = 0; c < 6 && p5 <= limit; ++c, p5 *= 5) {
      std::uint64_t p3 = p5;
      for (unsigned b = 0; p3 <= limit; ++b) {
        std::uint64_t v = p3;
        for (unsigned a = 0; v <= limit; ++a) {
          if (a + b + c > 0) check(v, a, b, c);
          if (v > limit / 2) break;
          v *= 2;
        }
        if (p3 > limit / 3) break;
        p3 *= 3;
      }
      if (p5 > limit / 5) break;
    }
  }
  report.add_stat("checked", as_int(checked));
  if (kind != ProductKind::pow235) report.add_stat("max_exponent", std::int64_t{max_exponent});
  fail.finish();
  return report;
}

Report check_pow2_plus1(const ComplexityTable& t) {
  Report report = table_report("pow2plus1", t);
  report.columns = {"n", "value", "complexity", "expected", "exception", "ok"};
  std::uint64_t mismatches = 0;
  for (unsigned n = 1; n < 63; ++n) {
    const std::uint64_t v = (std::uint64_t{1} << n) + 1;
    if (v > t.limit()) break;
    const bool exception = n == 3 || n == 9;
    const unsigned expected = n == 3 ? 6 : n == 9 ? 18 : 2 * n + 1;
    const bool ok = t[v] == expected;
    if (!ok) {
      ++mismatches;
      report.holds = false;
    }
    report.add_row({std::int64_t{n}, as_int(v), std::int64_t{t[v]}, std::int64_t{expected}, exception, ok});
  }
  report.add_stat("counterexamples", as_int(mismatches));
  return report;
}

std::vector<MersenneRow> mersenne_table(const ComplexityTable& t) {
  std::vector<MersenneRow> rows;
  for (unsigned n = 1; n < 63; ++n) {
    const std::uint64_t minus = (std::uint64_t{1} << n) - 1;
    if (minus > t.limit()) break;
    MersenneRow row;
    row.n = n;
    row.a = static_cast<int>(t[minus]) - static_cast<int>(2 * n);
    if (minus + 2 <= t.limit()) row.b = static_cast<int>(t[minus + 2]) - static_cast<int>(2 * n);
    if (n >= 2) {
      row.cap = static_cast<int>(mersenne_upper_bound(n)) - static_cast<int>(2 * n);
      row.within_cap = row.a <= *row.cap;
    }
    rows.push_back(row);
  }
  return rows;
}

Report check_mersenne(const ComplexityTable& t) {
  Report report = table_report("mersenne", t);
  report.columns = {"n", "A", "B", "cap", "within_cap", "note"};
  const auto rows = mersenne_table(t);
  std::uint64_t violations = 0;
  auto A = [&](unsigned n) -> std::optional<int> {
    if (n == 0 || n > rows.size()) return std::nullopt;
    return rows[n - 1].a;
  };

  for (const auto& row : rows) {
    std::string note;
    auto flag = [&](const std::string& what) {
      ++violations;
      report.holds = false;
      note += (note.empty() ? "" : "; ") + what;
    };
    if (!row.within_cap) flag("above Hamming-weight cap");
    if (row.n >= 2 && row.a > 2 * static_cast<int>(floor_log2(row.n)) - 2) flag("above 2log2(n)-2 cap");
    if (row.b) {
      if (auto a2 = A(2 * row.n); a2 && *a2 > row.a + *row.b) flag("A(2n) > A(n)+B(n)");
      if (auto a3 = A(3 * row.n); a3 && *a3 > row.a + *row.b + 1) flag("A(3n) > A(n)+B(n)+1");
    }
    if (auto next = A(row.n + 1); next && *next > row.a + 1) flag("A(n+1) > A(n)+1");
    // ‖2^(2^k) − 1‖ = 2·2^k + k − 2 for k ≥ 1, i.e. A(2^k) = k − 2.
    if (std::has_single_bit(row.n) && row.n >= 2) {
      const int k = static_cast<int>(floor_log2(row.n));
      if (row.a != k - 2) flag("A(2^k) != k-2");
    }
    Cell b = row.b ? Cell{std::int64_t{*row.b}} : Cell{};
    Cell cap = row.cap ? Cell{std::int64_t{*row.cap}} : Cell{};
    report.add_row({std::int64_t{row.n}, std::int64_t{row.a}, b, cap, row.within_cap, note});
  }
  report.add_stat("rows", as_int(rows.size()));
  report.add_stat("violations", as_int(violations));
  return report;
}

Report check_defect_rank(const ComplexityTable& t) {
  if (!t.has_ranks()) throw CapabilityError("defect-rank check needs a rank column");
  Report report = table_report("defect-rank", t);
  report.columns = {"n", "rank", "defect", "required"};
  Failures fail{report};
  const double step = 1.0 + 3.0 * std::log(6.0 / 7.0) / std::log(3.0);
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t tightest = 0;
  for (std::uint64_t n = 1; n <= t.limit(); ++n) {
    const unsigned r = t.rank(n);
    const unsigned halves = r == 0 ? 0 : (r - 1) / 2;
    const double required = halves * step;
    const double d = defect(n, t[n]);
    if (halves > 0 && d - required < min_slack) {
      min_slack = d - required;
      tightest = n;
    }
    if (d < required - 1e-9) fail.add({as_int(n), std::int64_t{r}, d, required});
  }
  if (tightest != 0) {
    report.add_stat("min_slack", min_slack);
    report.add_stat("tightest_n", as_int(tightest));
  }
  fail.finish();
  return report;
}

Report check_e_closed(const SequenceSet& seq) {
  Report report = sequence_base_report("e-closed", seq);
  report.columns = {"k", "E_emp", "E", "E2_emp", "E2", "ok"};
  std::uint64_t bad = 0;
  for (const auto& [k, entry] : seq.E_emp) {
    if (!entry.reliable || k > kMaxClosedFormIndex) continue;
    const std::uint64_t closed = e_closed(k);
    bool ok = entry.value == closed;
    Cell e2_emp;
    Cell e2;
    if (auto it = seq.E2_emp.find(k); it != seq.E2_emp.end() && it->second.reliable) e2_emp = as_int(it->second.value);
    if (k >= 8) {
      e2 = as_int(e2_closed(k));
      ok = ok && e2_emp == e2;
    }
    if (!ok) {
      ++bad;
      report.holds = false;
    }
    report.add_row({std::int64_t{k}, as_int(entry.value), as_int(closed), e2_emp, e2, ok});
  }
  report.add_stat("counterexamples", as_int(bad));
  return report;
}

Report check_prime_successor(const ComplexityTable& t) {
  Report report = table_report("primes", t);
  report.columns = {"p", "complexity", "predecessor"};
  Failures fail{report};
  const auto primes = primes_up_to(t.limit());
  for (const std::uint64_t p : primes) {
    if (t[p] != 1u + t[p - 1]) fail.add({as_int(p), std::int64_t{t[p]}, std::int64_t{t[p - 1]}});
  }
  report.add_stat("primes", as_int(primes.size()));
  fail.finish();
  return report;
}

Report check_e_primality(const SequenceSet& seq, const std::set<unsigned>& exceptions) {
  Report report = sequence_base_report("e-prime", seq);
  report.columns = {"k", "e", "prime", "expected_prime", "ok"};
  std::uint64_t bad = 0;
  for (const auto& [k, entry] : seq.e) {
    if (!entry.reliable) continue;
    const bool prime = is_prime(entry.value);
    const bool expected = !exceptions.count(k);
    if (prime != expected) {
      ++bad;
      report.holds = false;
    }
    report.add_row({std::int64_t{k}, as_int(entry.value), prime, expected, prime == expected});
  }
  report.add_stat("counterexamples", as_int(bad));
  return report;
}

Report check_log_ceiling(const ComplexityTable& t) {
  Report report = table_report("log-ceiling", t);
  report.columns = {"n", "logc", "e", "e_logc"};
  Failures fail{report};
  std::vector<std::uint64_t> first(256, 0);
  for (std::uint64_t n = 1; n <= t.limit(); ++n) {
    if (first[t[n]] == 0) first[t[n]] = n;
  }
  for (std::uint64_t n = 2; n <= t.limit(); ++n) {
    const std::uint64_t e = first[t[n]];
    if (e == n) continue;
    const double lhs = log_complexity(n, t[n]);
    const double rhs = log_complexity(e, t[e]);
    if (lhs > rhs * (1 + 1e-12)) fail.add({as_int(n), lhs, as_int(e), rhs});
  }
  fail.finish();
  return report;
}

}  // namespace icx
