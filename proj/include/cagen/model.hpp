#pragma once

#include <cstdint>
#include <vector>

namespace cagen {

// Marker for positions a tuple does not constrain. Parameter values are
// always 0-based non-negative, so -1 can never collide with a real value.
inline constexpr int kDontCare = -1;

// Problem instance: interaction strength t plus one cardinality per
// parameter. Valid instances satisfy 2 <= t <= k, k >= 2 and v[i] >= 2.
struct CAConfig {
  int strength = 0;
  std::vector<int> cardinalities;

  CAConfig() = default;
  CAConfig(int strength_, std::vector<int> cardinalities_);

  int parameter_count() const {
    return static_cast<int>(cardinalities.size());
  }

  bool operator==(const CAConfig&) const = default;
};

// One row of the array; values[i] lies in [0, v[i]-1].
using TestCase = std::vector<int>;

// A choice of t parameters (bit i of mask <=> parameter i) with one concrete
// value per chosen parameter and kDontCare elsewhere.
struct InteractionTuple {
  std::uint64_t mask = 0;
  std::vector<int> assignment;

  bool operator==(const InteractionTuple&) const = default;
};

struct TestSuite {
  CAConfig config;
  std::vector<TestCase> rows;
};

// True iff tc agrees with tup on every masked position; don't-care positions
// never constrain. Throws std::invalid_argument on a length mismatch.
bool covers(const TestCase& tc, const InteractionTuple& tup);

}  // namespace cagen
