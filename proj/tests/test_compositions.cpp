#include "doctest.h"

#include <set>
#include <vector>

#include "orderk/compositions.hpp"

using orderk::CompositionEnumerator;
using orderk::for_each_composition;

namespace {

// Independent oracle: number of partitions of x into parts of size <= k,
// which equals the number of weight-x multiplicity tuples.
long long partition_count_dp(int k, long long x) {
  std::vector<long long> dp(static_cast<std::size_t>(x) + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (long long v = part; v <= x; ++v)
      dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - part)];
  return dp[static_cast<std::size_t>(x)];
}

std::vector<std::vector<long long>> collect(int k, long long x) {
  std::vector<std::vector<long long>> out;
  for_each_composition(k, x, [&](const std::vector<long long>& c) {
    out.push_back(c);
  });
  return out;
}

}  // namespace

TEST_CASE("compositions: k=1 has the single tuple (x)") {
  auto tuples = collect(1, 5);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0] == std::vector<long long>{5});
}

TEST_CASE("compositions: k=2, x=3 in documented order") {
  auto tuples = collect(2, 3);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == std::vector<long long>{3, 0});
  CHECK(tuples[1] == std::vector<long long>{1, 1});
}

TEST_CASE("compositions: x=0 yields the all-zero tuple") {
  auto tuples = collect(4, 0);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0] == std::vector<long long>(4, 0));
}

TEST_CASE("compositions: every tuple has the target weight, no duplicates") {
  for (int k = 1; k <= 6; ++k) {
    for (long long x = 0; x <= 18; ++x) {
      std::set<std::vector<long long>> seen;
      long long n = 0;
      for_each_composition(k, x, [&](const std::vector<long long>& c) {
        REQUIRE(static_cast<int>(c.size()) == k);
        long long w = 0;
        for (int i = 0; i < k; ++i) {
          REQUIRE(c[static_cast<std::size_t>(i)] >= 0);
          w += (i + 1) * c[static_cast<std::size_t>(i)];
        }
        CHECK(w == x);
        seen.insert(c);
        ++n;
      });
      CHECK(n == static_cast<long long>(seen.size()));
      CHECK(n == partition_count_dp(k, x));
    }
  }
}

TEST_CASE("compositions: count for k=5, x=20 equals 192") {
  long long n = 0;
  for_each_composition(5, 20, [&](const std::vector<long long>&) { ++n; });
  CHECK(n == 192);
  CHECK(partition_count_dp(5, 20) == 192);
}

TEST_CASE("compositions: enumeration order is deterministic") {
  auto a = collect(4, 15);
  auto b = collect(4, 15);
  CHECK(a == b);
}

TEST_CASE("compositions: argument validation") {
  CHECK_THROWS_AS(CompositionEnumerator(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(CompositionEnumerator(2, -1), std::invalid_argument);
}
