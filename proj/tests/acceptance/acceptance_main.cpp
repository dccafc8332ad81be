// Acceptance run at the desk limit: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "icx/analysis/fit.hpp"
#include "icx/analysis/hypotheses.hpp"
#include "icx/analysis/scans.hpp"
#include "icx/analysis/sequences.hpp"
#include "icx/bounds.hpp"
#include "icx/dp.hpp"
#include "icx/enumerator.hpp"
#include "icx/io/icx_file.hpp"
#include "icx/sieve.hpp"
#include "reference_values.hpp"
#include "temp_dir.hpp"

using namespace icx;

namespace {

constexpr std::uint64_t kLimit = 2'000'000;

struct Outcome {
  bool pass = true;
  bool unexpected = false;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && !unexpected) detail << "first failure: " << what << "; ";
    pass = pass && ok;
    unexpected = unexpected || !ok;
  }
  // A mismatch traced to a misprint in the reference data. Still a FAIL line,
  // but it does not fail the run.
  void expect_known(bool ok, const std::string& what, const std::string& reason) {
    if (!ok) detail << "known discrepancy: " << what << " (" << reason << "); ";
    pass = pass && ok;
  }
};

int failures = 0;
int unexpected_failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.unexpected = true;
    o.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  if (o.unexpected) ++unexpected_failures;
  std::printf("%s %2d %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.str().c_str());
  std::fflush(stdout);
}

// Verdict plus a zero counterexample count; rows may list checked cases.
bool clean(const Report& r) {
  for (const auto& [key, value] : r.stats) {
    if (key == "counterexamples") return r.holds && value == Cell{std::int64_t{0}};
  }
  return r.holds;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

int main() {
  std::printf("building sieve (with ranks) and dp tables up to %llu\n",
              static_cast<unsigned long long>(kLimit));
  std::fflush(stdout);
  const ComplexityTable sieve = build_sieve(kLimit, true);
  const ComplexityTable dp = build_dp(kLimit);
  const SequenceSet seq = derive_sequences(sieve);

  criterion(1, "first fifteen complexities", [&](Outcome& o) {
    for (unsigned n = 1; n <= 15; ++n) {
      const unsigned want = reference::kFirstComplexities[n - 1];
      o.expect(sieve.complexity(n) == want, "sieve n=" + str(n));
      o.expect(dp.complexity(n) == want, "dp n=" + str(n));
      o.expect(build_sieve(15, false).complexity(n) == want, "sieve(15) n=" + str(n));
    }
  });

  criterion(2, "oracle, sieve and dp agree (n <= 5000), oracle rank = sieve rank (n <= 2000)",
            [&](Outcome& o) {
              Enumerator enumerator;
              OracleOptions options;
              options.collect_all = false;
              for (std::uint64_t n = 1; n <= 5000; ++n) {
                const auto r = enumerator.solve(n, options);
                o.expect(r.complexity == sieve[n] && r.complexity == dp[n], "complexity n=" + str(n));
                if (n <= 2000) o.expect(r.min_height == sieve.rank(n), "rank n=" + str(n));
              }
              const auto a = sieve.complexities(), b = dp.complexities();
              o.expect(std::equal(a.begin(), a.end(), b.begin(), b.end()), "sieve and dp tables differ");
            });

  criterion(3, "largest and second largest per complexity follow the closed forms", [&](Outcome& o) {
    const unsigned top = seq.E_reliable_max();
    o.expect(top >= 39, "reliable E range ends at " + std::to_string(top));
    for (unsigned k = 1; k <= top; ++k) {
      o.expect(seq.E_emp.at(k).value == e_closed(k), "E(" + std::to_string(k) + ")");
      if (k >= 8) o.expect(seq.E2_emp.at(k).value == e2_closed(k), "E2(" + std::to_string(k) + ")");
    }
    o.expect(clean(check_e_closed(seq)), "closed-form report");
    o.detail << "k <= " << top;
  });

  criterion(4, "smallest number of each complexity matches the reference", [&](Outcome& o) {
    const unsigned top = seq.e_reliable_max();
    o.expect(top >= 44, "reliable e range ends at " + std::to_string(top));
    for (unsigned k = 1; k <= top; ++k) {
      o.expect(seq.e.at(k).value == reference::kSmallestOfComplexity[k - 1], "e(" + std::to_string(k) + ")");
    }
    o.detail << "k <= " << top;
  });

  criterion(5, "smallest number of each rank matches the reference through rank 14", [&](Outcome& o) {
    o.expect(seq.r_reliable_max() >= 14, "reliable r range ends at " + std::to_string(seq.r_reliable_max()));
    for (unsigned k = 1; k <= 14; ++k) {
      const auto it = seq.r.find(k);
      o.expect(it != seq.r.end() && it->second.reliable, "r(" + std::to_string(k) + ") missing");
      if (it == seq.r.end()) continue;
      o.expect(it->second.value == reference::kSmallestOfRank[k - 1], "r(" + std::to_string(k) + ")");
      o.expect(sieve[it->second.value] == reference::kSmallestOfRankComplexity[k - 1],
               "complexity of r(" + std::to_string(k) + ")");
    }
    o.expect(seq.r.at(0).value == 1, "r(0)");
  });

  criterion(6, "sixteen largest logarithmic complexities", [&](Outcome& o) {
    const auto top = top_log_complexity(sieve, 16);
    o.expect(top.size() == 16, "row count");
    for (std::size_t i = 0; i < top.size(); ++i) {
      const auto& want = reference::kTopLog[i];
      const std::string at = "row " + std::to_string(i + 1);
      o.expect(top[i].n == want.n, at + " n");
      o.expect(top[i].complexity == want.complexity, at + " complexity");
      const bool close = std::abs(top[i].logc - want.logc) <= 5e-4;
      if (want.n == 4283) {
        std::ostringstream reason;
        reason.precision(6);
        reason << "29/log3(4283) = " << top[i].logc << ", reference prints " << want.logc
               << ", a truncation rather than a rounding";
        o.expect_known(close, at + " logc", reason.str());
      } else {
        o.expect(close, at + " logc");
      }
      o.expect(top[i].rank == want.rank, at + " rank");
    }
  });

  criterion(7, "powers of 2, 3 and 2^a 3^b 5^c, and 2^n + 1", [&](Outcome& o) {
    for (unsigned a = 1; a <= 20; ++a) o.expect(sieve[1ull << a] == 2 * a, "2^" + std::to_string(a));
    for (const auto kind : {ProductKind::pow2, ProductKind::pow3, ProductKind::pow235}) {
      const auto r = check_products(sieve, kind);
      o.expect(clean(r), r.name);
    }
    const auto plus = check_pow2_plus1(sieve);
    o.expect(clean(plus), plus.name);
    o.expect(sieve[9] == 6 && sieve[513] == 18, "exceptions 9 and 513");
  });

  criterion(8, "Mersenne excess table, Hamming cap and doubly exponential case", [&](Outcome& o) {
    const auto rows = mersenne_table(sieve);
    o.expect(rows.size() == 20, "rows cover n <= " + std::to_string(rows.size()));
    for (const auto& row : rows) {
      o.expect(row.a == reference::kMersenneExcess[row.n - 1], "A(" + std::to_string(row.n) + ")");
      if (row.n >= 2) {
        o.expect(row.cap == reference::kMersenneCap[row.n - 2], "cap(" + std::to_string(row.n) + ")");
      }
      o.expect(row.within_cap, "A(" + std::to_string(row.n) + ") above cap");
    }
    for (unsigned k = 1; (1ull << (1u << k)) - 1 <= kLimit; ++k) {
      const std::uint64_t v = (1ull << (1u << k)) - 1;
      o.expect(sieve[v] == 2 * (1u << k) + k - 2, "2^(2^" + std::to_string(k) + ")-1");
    }
    o.expect(clean(check_mersenne(sieve)), "mersenne report");
  });

  criterion(9, "defect bounded below by rank", [&](Outcome& o) {
    const auto r = check_defect_rank(sieve);
    o.expect(clean(r) && r.rows.empty(), "violations: " + std::to_string(r.rows.size()));
  });

  criterion(10, "collapse powers of small primes", [&](Outcome& o) {
    const auto records = collapse_scan(sieve, 1000);
    auto find = [&](std::uint64_t p) -> const CollapseRecord& {
      return *std::find_if(records.begin(), records.end(), [p](const auto& r) { return r.p == p; });
    };
    o.expect(find(5).collapses && find(5).k == 6 && sieve[15625] == 29, "p=5");
    o.expect(find(11).collapses && find(11).k == 2 && sieve[121] == 15, "p=11");
    unsigned checked = 0;
    for (const auto& row : reference::kCollapse) {
      const auto& got = find(row.p);
      const std::string at = "p=" + str(row.p);
      o.expect(got.complexity == row.complexity, at + " complexity");
      o.expect(got.rank == row.rank, at + " rank");
      std::uint64_t pk = 1;
      unsigned max_k = 0;
      while (pk <= kLimit / row.p) {
        pk *= row.p;
        ++max_k;
      }
      switch (row.status) {
        case reference::Collapse::resistant:
          o.expect(!got.collapses, at + " should stay open");
          break;
        case reference::Collapse::above:
          o.expect(!got.collapses || got.k > row.bound, at + " collapses too early");
          break;
        case reference::Collapse::exact:
          if (row.bound <= max_k) {
            o.expect(got.collapses && got.k == row.bound, at + " collapse power");
            ++checked;
          } else {
            o.expect(!got.collapses, at + " collapses below the reference power");
          }
          break;
        case reference::Collapse::at_most:
          if (row.bound <= max_k) o.expect(got.collapses && got.k <= row.bound, at + " collapse bound");
          break;
      }
    }
    o.detail << checked << " exact collapse powers in range";
  });

  criterion(11, "no number needs a first subtraction of 6, 8 or 9", [&](Outcome& o) {
    const auto scan = first_operation_scan(sieve);
    o.expect(scan.records.empty(), std::to_string(scan.records.size()) + " records");
    o.expect(scan.products + scan.sub1 == kLimit - 1, "classification totals");
    o.detail << "extended tier (4e8) not run";
  });

  criterion(12, "doubling chains ending at smallest numbers of each complexity", [&](Outcome& o) {
    const auto chains = chain_scan(seq);
    auto len = [&](unsigned n) { return chains.at(n - 1).chain.size(); };
    o.expect(len(13) == 5 && chains.at(12).chain.front() == 2, "e(13)");
    o.expect(len(26) >= 5, "e(26)");
    o.expect(len(27) == 6, "e(27)");
    unsigned reproduced = 0;
    for (const auto& r : chains) {
      const bool four = std::count(reference::kChainLength4.begin(), reference::kChainLength4.end(), r.n) > 0;
      const bool longer =
          std::count(reference::kChainLength5Plus.begin(), reference::kChainLength5Plus.end(), r.n) > 0;
      o.expect((r.chain.size() == 4) == four, "length-4 status of e(" + std::to_string(r.n) + ")");
      o.expect((r.chain.size() >= 5) == longer, "length-5+ status of e(" + std::to_string(r.n) + ")");
      reproduced += four;
    }
    o.detail << reproduced << " length-4 chains in reliable range";
  });

  criterion(13, "asymptote fit of log3 e(n) for n in [10, 44]", [&](Outcome& o) {
    std::vector<std::pair<unsigned, std::uint64_t>> reference_points, derived_points;
    for (unsigned n = 10; n <= 44; ++n) {
      reference_points.emplace_back(n, reference::kSmallestOfComplexity[n - 1]);
      derived_points.emplace_back(n, seq.e.at(n).value);
    }
    const auto fit = fit_e_asymptote(reference_points);
    o.expect(fit.slope >= 0.27 && fit.slope <= 0.33, "slope " + std::to_string(fit.slope));
    o.expect(std::abs(fit_e_asymptote(derived_points).slope - fit.slope) < 1e-12, "derived slope");
    o.detail << "slope " << fit.slope << " intercept " << fit.intercept;
  });

  criterion(14, "save/load roundtrip and dp resume are bit identical", [&](Outcome& o) {
    testing::TempDir dir("acceptance");
    const auto path = dir.path / "sieve.icx";
    save_table(sieve, path);
    o.expect(load_table(path) == sieve, "sieve roundtrip");

    const auto ckpt = dir.path / "dp.ckpt";
    DpOptions options;
    options.checkpoint_every = kLimit / 2;
    options.checkpoint_path = ckpt;
    DpBuilder partial(kLimit, options);
    partial.advance_to(kLimit / 2);
    o.expect(partial.durable_position() == kLimit / 2, "checkpoint position");
    const auto resumed = resume_dp(ckpt, kLimit);
    o.expect(resumed == dp, "resumed dp table");
    const auto dp_path = dir.path / "dp.icx";
    save_table(resumed, dp_path);
    o.expect(load_table(dp_path) == dp, "dp roundtrip");
  });

  std::printf("N/A 15 full-range counts (1e12 verifications, subtraction-of-6/8/9 census) "
              "are not reproducible at this limit\n");
  std::printf("%d criteria failed, %d with unexplained failures\n", failures, unexpected_failures);
  return unexpected_failures == 0 ? 0 : 1;
}
