#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cagen/model.hpp"

namespace cagen {

struct VerifyReport {
  bool complete = false;
  std::uint64_t tuple_count = 0;
  std::vector<InteractionTuple> missing;
  // Cover count per tuple, in enumeration order (missing tuples count 0).
  std::vector<std::pair<InteractionTuple, std::uint64_t>> redundancy;
  // Rows with the wrong length or out-of-range values; such rows are
  // excluded from coverage counting.
  std::vector<std::string> structural_errors;
};

// Brute-force coverage check. Enumerates parameter subsets and value
// products directly and tests each tuple against every row; shares no code
// with the store construction it cross-checks.
VerifyReport verify_suite(const TestSuite& suite);

// Max over t-subsets of the cardinality product, i.e. the product of the t
// largest cardinalities. No suite can be smaller.
std::uint64_t size_lower_bound(const CAConfig& cfg);

}  // namespace cagen
