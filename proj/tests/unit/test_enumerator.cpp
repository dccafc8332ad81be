#include <set>

#include "brute_complexity.hpp"
#include "doctest.h"
#include "icx/enumerator.hpp"
#include "icx/errors.hpp"

using namespace icx;

TEST_CASE("small examples") {
  const auto one = oracle_complexity(1);
  CHECK(one.complexity == 1);
  CHECK(one.min_height == 0);
  REQUIRE(one.shortest.size() == 1);
  CHECK(one.shortest.front() == ExprTree::one());

  const auto eight = oracle_complexity(8);
  CHECK(eight.complexity == 6);
  CHECK(std::find(eight.shortest.begin(), eight.shortest.end(), postfix_parse("11+11+*11+*")) !=
        eight.shortest.end());

  const auto fourteen = oracle_complexity(14);
  CHECK(fourteen.complexity == 8);
  CHECK(fourteen.min_height == 4);
  CHECK(oracle_complexity(7).min_height == 3);
  CHECK(oracle_complexity(11).min_height == 3);
  CHECK(oracle_complexity(13).min_height == 3);
}

TEST_CASE("result invariants") {
  Enumerator enumerator;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto r = enumerator.solve(n);
    REQUIRE_FALSE(r.shortest.empty());
    unsigned least = ~0u;
    std::set<std::string> seen;
    for (const auto& t : r.shortest) {
      CHECK(t.value() == n);
      CHECK(t.ones() == r.complexity);
      CHECK(t.is_canonical());
      CHECK(seen.insert(postfix_emit(t)).second);
      least = std::min(least, t.height());
    }
    CHECK(least == r.min_height);
  }
}

TEST_CASE("agrees with the quadratic recurrence") {
  const auto f = testing::brute_complexity(2000);
  Enumerator enumerator;
  OracleOptions options;
  options.collect_all = false;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto r = enumerator.solve(n, options);
    REQUIRE_MESSAGE(r.complexity == f[n], n);
    REQUIRE(r.shortest.size() == 1);
    CHECK(r.shortest.front().height() == r.min_height);
  }
}

TEST_CASE("unordered generation yields the same canonical set") {
  for (std::uint64_t n : {23ull, 46ull, 96ull, 107ull, 179ull, 360ull}) {
    OracleOptions loose;
    loose.enforce_order = false;
    const auto strict = oracle_complexity(n);
    const auto relaxed = oracle_complexity(n, loose);
    CHECK(strict.complexity == relaxed.complexity);
    CHECK(strict.shortest == relaxed.shortest);
  }
}

TEST_CASE("expressions with a fixed ones count") {
  Enumerator enumerator;
  CHECK(enumerator.exists(6, 5));
  CHECK_FALSE(enumerator.exists(6, 4));
  CHECK(enumerator.exists(6, 6));
  const auto sixes = enumerator.expressions(6, 5);
  REQUIRE(sixes.size() == 1);
  CHECK(postfix_emit(sixes.front()) == "11+11+1+*");
  CHECK(enumerator.memo_size() > 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(oracle_complexity(0), DomainError);
  OracleOptions capped;
  capped.ones_cap = 10;
  CHECK_THROWS_AS(oracle_complexity(1439, capped), CapExceededError);
}
