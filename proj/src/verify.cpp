#include "cagen/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace cagen {

namespace {

// Rows usable for coverage: correct length, every value in range.
std::vector<const TestCase*> structurally_valid_rows(
    const TestSuite& suite, std::vector<std::string>& errors) {
  const int k = suite.config.parameter_count();
  std::vector<const TestCase*> rows;
  rows.reserve(suite.rows.size());
  for (std::size_t r = 0; r < suite.rows.size(); ++r) {
    const TestCase& row = suite.rows[r];
    if (static_cast<int>(row.size()) != k) {
      errors.push_back("row " + std::to_string(r) + ": length " +
                       std::to_string(row.size()) + " != " +
                       std::to_string(k));
      continue;
    }
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      if (row[i] < 0 || row[i] >= suite.config.cardinalities[i]) {
        errors.push_back("row " + std::to_string(r) + ": value " +
                         std::to_string(row[i]) + " out of range for p" +
                         std::to_string(i));
        ok = false;
        break;
      }
    }
    if (ok) rows.push_back(&row);
  }
  return rows;
}

}  // namespace

VerifyReport verify_suite(const TestSuite& suite) {
  const CAConfig& cfg = suite.config;
  const int k = cfg.parameter_count();
  const int t = cfg.strength;

  VerifyReport report;
  const auto rows = structurally_valid_rows(suite, report.structural_errors);

  // March through every t-subset of parameters (classic next-combination)
  // and every value assignment for the subset (odometer).
  std::vector<int> subset(t);
  for (int i = 0; i < t; ++i) subset[i] = i;

  while (true) {
    std::uint64_t mask = 0;
    for (const int p : subset) mask |= std::uint64_t{1} << p;

    std::vector<int> values(t, 0);
    while (true) {
      InteractionTuple tup;
      tup.mask = mask;
      tup.assignment.assign(k, kDontCare);
      for (int i = 0; i < t; ++i) tup.assignment[subset[i]] = values[i];

      std::uint64_t count = 0;
      for (const TestCase* row : rows) {
        bool match = true;
        for (int i = 0; i < t; ++i) {
          if ((*row)[subset[i]] != values[i]) {
            match = false;
            break;
          }
        }
        if (match) ++count;
      }
      ++report.tuple_count;
      if (count == 0) report.missing.push_back(tup);
      report.redundancy.emplace_back(std::move(tup), count);

      // Advance the odometer.
      int pos = t - 1;
      while (pos >= 0 &&
             ++values[pos] == cfg.cardinalities[subset[pos]]) {
        values[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }

    // Next combination.
    int pos = t - 1;
    while (pos >= 0 && subset[pos] == k - t + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < t; ++i) subset[i] = subset[i - 1] + 1;
  }

  report.complete = report.missing.empty();
  return report;
}

std::uint64_t size_lower_bound(const CAConfig& cfg) {
  std::vector<int> sorted = cfg.cardinalities;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::uint64_t product = 1;
  for (int i = 0; i < cfg.strength; ++i) {
    if (__builtin_mul_overflow(product,
                               static_cast<std::uint64_t>(sorted[i]),
                               &product)) {
      throw std::overflow_error("lower bound overflows 64 bits");
    }
  }
  return product;
}

}  // namespace cagen
