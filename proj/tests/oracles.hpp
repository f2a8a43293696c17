#pragma once

// Brute-force helpers shared by the test suites. These deliberately use the
// dumbest possible enumeration (recursive subset + odometer over values) so
// they stay independent of the store/mask machinery they cross-check.

#include <cstdint>
#include <set>
#include <vector>

#include "cagen/model.hpp"

namespace oracle {

// Every t-subset of {0..k-1}, lexicographic.
inline void subsets_rec(int k, int t, int start, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == t) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i < k; ++i) {
    acc.push_back(i);
    subsets_rec(k, t, i + 1, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> subsets(int k, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  subsets_rec(k, t, 0, acc, out);
  return out;
}

// All interaction tuples of cfg as full assignment vectors (kDontCare on
// unused positions).
inline std::vector<std::vector<int>> all_tuples(const cagen::CAConfig& cfg) {
  std::vector<std::vector<int>> out;
  for (const auto& subset : subsets(cfg.parameter_count(), cfg.strength)) {
    std::vector<int> values(subset.size(), 0);
    while (true) {
      std::vector<int> assignment(cfg.parameter_count(), cagen::kDontCare);
      for (std::size_t i = 0; i < subset.size(); ++i) {
        assignment[subset[i]] = values[i];
      }
      out.push_back(std::move(assignment));
      int pos = static_cast<int>(subset.size()) - 1;
      while (pos >= 0 &&
             ++values[pos] == cfg.cardinalities[subset[pos]]) {
        values[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

// Every test case of cfg (mixed-radix odometer).
inline std::vector<cagen::TestCase> all_test_cases(const cagen::CAConfig& cfg) {
  std::vector<cagen::TestCase> out;
  cagen::TestCase tc(cfg.parameter_count(), 0);
  while (true) {
    out.push_back(tc);
    int pos = cfg.parameter_count() - 1;
    while (pos >= 0 && ++tc[pos] == cfg.cardinalities[pos]) {
      tc[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace oracle
