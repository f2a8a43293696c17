#include <doctest.h>

#include <sstream>

#include "cagen/notation.hpp"
#include "cagen/rng.hpp"

using namespace cagen;

TEST_CASE("parses exponent notation") {
  const CAConfig mca = parse_ca_notation("MCA(2,5^1 3^8 2^2)");
  CHECK(mca.strength == 2);
  CHECK(mca.cardinalities ==
        std::vector<int>{5, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2});

  CHECK(parse_ca_notation("CA(2,2^2)") == CAConfig(2, {2, 2}));
  CHECK(parse_ca_notation("CA(2,3^13)") ==
        CAConfig(2, std::vector<int>(13, 3)));
  CHECK(parse_ca_notation("CA(3,4^6)") == CAConfig(3, std::vector<int>(6, 4)));
}

TEST_CASE("notation is whitespace and case tolerant") {
  CHECK(parse_ca_notation("  ca( 2 , 3^4 )  ") ==
        CAConfig(2, {3, 3, 3, 3}));
  CHECK(parse_ca_notation("CA(N;2,3^4)") == CAConfig(2, {3, 3, 3, 3}));
  CHECK(parse_ca_notation("MCA(N; 2, 6^1 5^1 4^6 3^8 2^3)").parameter_count() ==
        19);
  // A bare factor means exponent 1.
  CHECK(parse_ca_notation("MCA(2,5 3^2)") == CAConfig(2, {5, 3, 3}));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_ca_notation("CA(5,3^4)"), NotationError);  // t > k
  CHECK_THROWS_AS(parse_ca_notation("CA(1,3^4)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,1^4)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,3^0)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,3^)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,3^4"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("XA(2,3^4)"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation("CA(2,3^4) junk"), NotationError);
  CHECK_THROWS_AS(parse_ca_notation(""), NotationError);

  try {
    parse_ca_notation("CA(5,3^4)");
    FAIL("expected a parse error");
  } catch (const NotationError& e) {
    CHECK(e.position() == 3);  // points at the strength
  }
}

TEST_CASE("render is the parser's inverse") {
  CHECK(render_ca_notation(CAConfig(2, std::vector<int>(13, 3))) ==
        "CA(2,3^13)");
  CHECK(render_ca_notation(CAConfig(2, {5, 3, 3, 2})) == "MCA(2,5^1 3^2 2^1)");

  Rng rng(60321);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = rng.uniform_int(2, 12);
    std::vector<int> card(k);
    for (int& v : card) v = rng.uniform_int(2, 9);
    const CAConfig cfg(rng.uniform_int(2, k), card);
    CHECK(parse_ca_notation(render_ca_notation(cfg)) == cfg);
  }
}

TEST_CASE("suite csv round trip") {
  TestSuite suite;
  suite.config = CAConfig(2, {3, 2, 2, 2});
  suite.rows = {{1, 0, 1, 0}, {0, 1, 1, 1}, {2, 0, 0, 1}};

  std::stringstream buffer;
  write_suite_csv(buffer, suite);
  CHECK(buffer.str().rfind("p0,p1,p2,p3\n", 0) == 0);

  const auto rows = read_suite_csv(buffer);
  CHECK(rows == suite.rows);
}

TEST_CASE("suite csv reader tolerates a missing header") {
  std::stringstream buffer("0,1\n1,0\n");
  CHECK(read_suite_csv(buffer) ==
        std::vector<TestCase>{{0, 1}, {1, 0}});

  std::stringstream garbage("p0,p1\n0,x\n");
  CHECK_THROWS_AS(read_suite_csv(garbage), NotationError);
}
