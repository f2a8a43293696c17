#include <doctest.h>

#include <algorithm>
#include <set>

#include "cagen/tuplegen.hpp"
#include "cagen/verify.hpp"
#include "oracles.hpp"

using namespace cagen;

namespace {

const CAConfig kPizza(2, {3, 2, 2, 2});

const std::vector<TestCase> kSevenRowSuite = {
    {1, 0, 1, 0}, {0, 1, 1, 1}, {2, 0, 0, 1}, {1, 1, 0, 0},
    {0, 0, 0, 0}, {2, 1, 1, 0}, {1, 1, 1, 1},
};

TestSuite make_suite(const CAConfig& cfg, std::vector<TestCase> rows) {
  TestSuite s;
  s.config = cfg;
  s.rows = std::move(rows);
  return s;
}

}  // namespace

TEST_CASE("the 7-row pairwise suite is complete") {
  const VerifyReport report = verify_suite(make_suite(kPizza, kSevenRowSuite));
  CHECK(report.complete);
  CHECK(report.tuple_count == 30);
  CHECK(report.missing.empty());
  CHECK(report.structural_errors.empty());
}

TEST_CASE("dropping the last row opens a hole") {
  std::vector<TestCase> rows(kSevenRowSuite.begin(),
                             kSevenRowSuite.end() - 1);
  const VerifyReport report = verify_suite(make_suite(kPizza, rows));
  CHECK_FALSE(report.complete);
  REQUIRE_FALSE(report.missing.empty());
  // The pair (P1, P4) = (1, 1) only appears in the deleted row.
  InteractionTuple expected;
  expected.mask = 0b1001;
  expected.assignment = {1, kDontCare, kDontCare, 1};
  CHECK(std::find(report.missing.begin(), report.missing.end(), expected) !=
        report.missing.end());
}

TEST_CASE("an empty suite misses everything") {
  const VerifyReport report = verify_suite(make_suite(kPizza, {}));
  CHECK_FALSE(report.complete);
  CHECK(report.missing.size() == 30);
  CHECK(report.tuple_count == 30);
}

TEST_CASE("verifier agrees with the store on every small config") {
  // Exhaustive sweep: k <= 6, v in {2,3,4}, t <= 3. The verifier's count of
  // an empty suite must equal the store's initial remaining count.
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> card(k, 2);
    while (true) {
      for (int t = 2; t <= std::min(3, k); ++t) {
        const CAConfig cfg(t, card);
        const VerifyReport report = verify_suite(make_suite(cfg, {}));
        CHECK(report.missing.size() == build_store(cfg).remaining());
      }
      int pos = k - 1;
      while (pos >= 0 && ++card[pos] == 5) {
        card[pos] = 2;
        --pos;
      }
      if (pos < 0) break;
    }
  }
}

TEST_CASE("redundancy counts for the exhaustive suite") {
  // All 24 rows of MCA(2, 3^1 2^3): a pair over (P1, Pi) appears 24/6 = 4
  // times, a pair over two binary parameters 24/4 = 6 times.
  const VerifyReport report =
      verify_suite(make_suite(kPizza, oracle::all_test_cases(kPizza)));
  CHECK(report.complete);
  for (const auto& [tup, count] : report.redundancy) {
    const bool involves_p0 = (tup.mask & 1u) != 0;
    CHECK(count == (involves_p0 ? 4u : 6u));
  }
}

TEST_CASE("malformed rows are structural errors, not misses") {
  std::vector<TestCase> rows = kSevenRowSuite;
  rows.push_back({0, 0, 0});        // short row
  rows.push_back({0, 9, 0, 0});     // out of range
  const VerifyReport report = verify_suite(make_suite(kPizza, rows));
  CHECK(report.complete);  // the 7 good rows still cover everything
  CHECK(report.structural_errors.size() == 2);
}

TEST_CASE("size lower bound") {
  CHECK(size_lower_bound(kPizza) == 6);
  CHECK(size_lower_bound(CAConfig(2, std::vector<int>(5, 10))) == 100);
  CHECK(size_lower_bound(CAConfig(3, {2, 3, 4})) == 24);  // t = k
  CHECK(size_lower_bound(CAConfig(2, {2, 5, 3, 4})) == 20);
}
