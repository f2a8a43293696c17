#include "cagen/model.hpp"

#include <stdexcept>
#include <string>

namespace cagen {

CAConfig::CAConfig(int strength_, std::vector<int> cardinalities_)
    : strength(strength_), cardinalities(std::move(cardinalities_)) {
  const int k = parameter_count();
  if (k < 2) {
    throw std::invalid_argument("config needs at least 2 parameters, got " +
                                std::to_string(k));
  }
  if (k > 63) {
    throw std::invalid_argument("parameter count " + std::to_string(k) +
                                " exceeds the 63-bit mask width");
  }
  if (strength < 2 || strength > k) {
    throw std::invalid_argument("strength " + std::to_string(strength) +
                                " outside [2, " + std::to_string(k) + "]");
  }
  for (int i = 0; i < k; ++i) {
    if (cardinalities[i] < 2) {
      throw std::invalid_argument("parameter " + std::to_string(i) +
                                  " has cardinality " +
                                  std::to_string(cardinalities[i]) +
                                  ", need >= 2");
    }
  }
}

bool covers(const TestCase& tc, const InteractionTuple& tup) {
  if (tc.size() != tup.assignment.size()) {
    throw std::invalid_argument("test case and tuple lengths differ");
  }
  for (std::size_t i = 0; i < tc.size(); ++i) {
    if ((tup.mask >> i) & 1u) {
      if (tc[i] != tup.assignment[i]) return false;
    }
  }
  return true;
}

}  // namespace cagen
