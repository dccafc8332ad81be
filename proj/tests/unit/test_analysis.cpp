#include <cmath>

#include "doctest.h"
#include "icx/analysis/fit.hpp"
#include "icx/analysis/hypotheses.hpp"
#include "icx/analysis/reconstruct.hpp"
#include "icx/analysis/reporting.hpp"
#include "icx/analysis/scans.hpp"
#include "icx/analysis/sequences.hpp"
#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/number_theory.hpp"
#include "reference_values.hpp"
#include "shared_tables.hpp"

using namespace icx;
using testing::shared_table;

TEST_CASE("sequences and their reliable ranges") {
  const auto seq = derive_sequences(shared_table());
  CHECK(seq.e.at(11).value == 23);
  CHECK(seq.e.at(26).value == 1439);
  CHECK(seq.r.at(9).value == 1439);
  CHECK(seq.e_reliable_max() == 39);
  CHECK(seq.E_reliable_max() == 31);
  CHECK(seq.r_reliable_max() == 11);
  for (unsigned k = 1; k <= seq.e_reliable_max(); ++k) {
    CHECK(seq.e.at(k).value == reference::kSmallestOfComplexity[k - 1]);
  }
  for (unsigned k = 1; k <= seq.r_reliable_max(); ++k) {
    CHECK(seq.r.at(k).value == reference::kSmallestOfRank[k - 1]);
  }
  for (unsigned k = 1; k <= seq.E_reliable_max(); ++k) {
    CHECK(seq.E_emp.at(k).value == e_closed(k));
    CHECK(seq.e.at(k).value <= seq.E_emp.at(k).value);
  }
  CHECK((seq.e.count(40) == 0 || !seq.e.at(40).reliable));
  CHECK_THROWS_AS(derive_sequences(build_sieve(100, false), true), CapabilityError);
  CHECK_FALSE(derive_sequences(build_sieve(100, false)).has_rank);
}

TEST_CASE("reconstruction") {
  const auto& t = shared_table();
  const auto ten = reconstruct(t, 10, ReconstructPolicy::any_shortest);
  CHECK(ten.ones() == 7);
  CHECK(ten.value() == 10);
  CHECK(reconstruct(t, 1, ReconstructPolicy::any_shortest) == ExprTree::one());
  CHECK(reconstruct(t, 14, ReconstructPolicy::min_height).height() == 4);
  CHECK(shortest_height(t, 1439) == 9);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto any = reconstruct(t, n, ReconstructPolicy::any_shortest);
    const auto low = reconstruct(t, n, ReconstructPolicy::min_height);
    REQUIRE(any.value() == n);
    REQUIRE(any.ones() == t[n]);
    REQUIRE(any.is_canonical());
    REQUIRE(low.ones() == t[n]);
    REQUIRE_MESSAGE(low.height() == t.rank(n), n);
  }
  CHECK_THROWS_AS(reconstruct(t, t.limit() + 1, ReconstructPolicy::any_shortest), RangeError);
  CHECK_THROWS_AS(reconstruct(t, 0, ReconstructPolicy::any_shortest), RangeError);
}

TEST_CASE("every identity holds on the shared table") {
  const auto& t = shared_table();
  const auto seq = derive_sequences(t);
  for (const auto& r : {check_bounds(t), check_products(t, ProductKind::pow2),
                        check_products(t, ProductKind::pow3), check_products(t, ProductKind::pow235),
                        check_pow2_plus1(t), check_mersenne(t), check_defect_rank(t),
                        check_e_closed(seq), check_prime_successor(t), check_e_primality(seq),
                        check_log_ceiling(t)}) {
    CHECK_MESSAGE(r.holds, r.name);
  }
}

TEST_CASE("a corrupted table produces counterexamples, not exceptions") {
  const auto& good = shared_table();
  std::vector<std::uint8_t> f(good.complexities().begin(), good.complexities().end());
  f[1024] = 21;
  const ComplexityTable bad(f, std::nullopt, AlgorithmTag::sieve);
  const auto pow2 = check_products(bad, ProductKind::pow2);
  CHECK_FALSE(pow2.holds);
  REQUIRE(pow2.rows.size() == 1);
  CHECK(std::get<std::int64_t>(pow2.rows[0][0]) == 1024);
  CHECK_FALSE(check_bounds(bad).holds);
  CHECK_THROWS_AS(check_defect_rank(bad), CapabilityError);
  CHECK_FALSE(check_e_primality(derive_sequences(good), {}).holds);
}

TEST_CASE("Mersenne rows") {
  const auto rows = mersenne_table(shared_table());
  REQUIRE(rows.size() == 16);
  for (const auto& row : rows) {
    CHECK(row.a == reference::kMersenneExcess[row.n - 1]);
    if (row.n >= 2) {
      REQUIRE(row.cap.has_value());
      CHECK(*row.cap == reference::kMersenneCap[row.n - 2]);
      CHECK(row.within_cap);
    }
  }
  CHECK(rows[9].a == 2);
  CHECK(rows[2].b == 0);
  CHECK(rows[5].a <= rows[2].a + *rows[2].b);
}

TEST_CASE("defect and rank") {
  const auto& t = shared_table();
  const double c = 1 + 3 * std::log(6.0 / 7.0) / std::log(3.0);
  CHECK(defect(1439, t[1439]) >= (t.rank(1439) - 1) / 2 * c);
  CHECK(defect(1439, t[1439]) == doctest::Approx(6.14303).epsilon(1e-5));
  CHECK((t.rank(1439) - 1) / 2 * c == doctest::Approx(2.31623).epsilon(1e-5));
  CHECK(defect(2, t[2]) >= 0);
}

TEST_CASE("collapse scan") {
  const auto records = collapse_scan(shared_table(), 1000);
  CHECK(records.size() == primes_up_to(999).size());
  auto find = [&](std::uint64_t p) {
    return *std::find_if(records.begin(), records.end(), [p](const auto& r) { return r.p == p; });
  };
  CHECK(find(5).collapses);
  CHECK(find(5).k == 6);
  CHECK(find(11).collapses);
  CHECK(find(11).k == 2);
  CHECK_FALSE(find(3).collapses);
  CHECK(find(3).k == 10);
  CHECK(find(127).collapses);
  CHECK(find(127).k == 2);
  CHECK_FALSE(find(977).collapses);
  CHECK(find(977).k == 1);
  CHECK(find(977).rank == 5u);
  CHECK(find(977).logc == doctest::Approx(3.351).epsilon(2e-4));
}

TEST_CASE("first operation classification") {
  const auto& t = shared_table();
  CHECK(classify_first_operation(t, 7).classification == FirstOp::sub1);
  CHECK(classify_first_operation(t, 6).classification == FirstOp::product);
  CHECK(classify_first_operation(t, 6).has_product_decomposition);
  CHECK(classify_first_operation(t, 7).minimal_addend == 1u);
  const auto scan = first_operation_scan(t);
  CHECK(scan.records.empty());
  CHECK(scan.products + scan.sub1 == t.limit() - 1);
  CHECK(std::string(to_string(FirstOp::sub6)) == "sub6");
}

TEST_CASE("doubling chains") {
  const auto seq = derive_sequences(shared_table(), false);
  const auto chains = chain_scan(seq);
  REQUIRE(chains.size() == seq.e_reliable_max());
  CHECK(chains[12].end == 47);
  CHECK(chains[12].chain == std::vector<std::uint64_t>{2, 5, 11, 23, 47});
  CHECK(chains[25].chain.size() == 5);
  CHECK(chains[26].chain.size() == 6);
  CHECK_FALSE(chains[3].end_prime);
  CHECK(chains[3].chain.empty());
  for (const auto& r : chains) {
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) CHECK(r.chain[i + 1] == 2 * r.chain[i] + 1);
    const bool four = std::count(reference::kChainLength4.begin(), reference::kChainLength4.end(), r.n) > 0;
    const bool longer =
        std::count(reference::kChainLength5Plus.begin(), reference::kChainLength5Plus.end(), r.n) > 0;
    CHECK_MESSAGE((r.chain.size() == 4) == four, r.n);
    CHECK_MESSAGE((r.chain.size() >= 5) == longer, r.n);
  }
}

TEST_CASE("least squares") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {1, 3, 5, 7};
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(-1.0));
  for (double r : fit.residuals) CHECK(std::abs(r) < 1e-12);
  const std::vector<double> two_x = {0, 1}, two_y = {5, 9};
  CHECK(fit_line(two_x, two_y).slope == doctest::Approx(4.0));
  const std::vector<double> same = {1, 1};
  CHECK_THROWS_AS(fit_line(same, two_y), CapabilityError);

  std::vector<std::pair<unsigned, std::uint64_t>> points;
  for (unsigned n = 10; n <= 44; ++n) points.emplace_back(n, reference::kSmallestOfComplexity[n - 1]);
  const auto e_fit = fit_e_asymptote(points);
  CHECK(e_fit.slope >= 0.27);
  CHECK(e_fit.slope <= 0.33);
  double dot = 0, sum = 0;
  for (std::size_t i = 0; i < e_fit.x.size(); ++i) {
    dot += e_fit.x[i] * e_fit.residuals[i];
    sum += e_fit.residuals[i];
  }
  CHECK(std::abs(dot) < 1e-9);
  CHECK(std::abs(sum) < 1e-9);
  points.resize(9);
  CHECK_THROWS_AS(fit_e_asymptote(points), CapabilityError);
}

TEST_CASE("largest logarithmic complexity") {
  const auto top = top_log_complexity(shared_table(), 16);
  REQUIRE(top.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto& want = reference::kTopLog[i];
    CHECK(top[i].n == want.n);
    CHECK(top[i].complexity == want.complexity);
    CHECK(std::abs(top[i].logc - want.logc) <= 1e-3);
    CHECK(top[i].rank == want.rank);
  }
}

TEST_CASE("reports echo provenance") {
  const auto& t = shared_table();
  const auto seq = derive_sequences(t);
  const auto r = sequence_report(seq);
  auto meta = [&](const std::string& key) {
    return std::find_if(r.meta.begin(), r.meta.end(), [&](const auto& kv) { return kv.first == key; }) !=
           r.meta.end();
  };
  CHECK(meta("limit"));
  CHECK(meta("algorithm"));
  CHECK(meta("e_reliable_max"));
  CHECK(meta("r_reliable_max"));
  CHECK(collapse_report(t, collapse_scan(t, 100)).columns.size() > 0);
  CHECK(chain_report(seq, chain_scan(seq)).holds);
}
