#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cagen {

struct RankSumResult {
  double statistic = 0.0;  // signed z-score of the first sample
  double p_value = 1.0;
};

// Two-sided Wilcoxon rank-sum: midranks for ties, tie-corrected variance,
// normal approximation with continuity correction. Requires at least 10
// observations per sample. Degenerate pooled samples (zero variance) give
// p = 1.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a,
                                const std::vector<double>& b);

struct HolmDecision {
  std::string label;
  double p_value = 1.0;
  double threshold = 0.0;
  bool reject = false;
};

// Step-down Holm correction: the i-th smallest p-value (1-based) is compared
// against alpha/(m-i+1) and rejection stops at the first failure. Results
// come back sorted by ascending p-value.
std::vector<HolmDecision> bonferroni_holm(
    const std::vector<std::pair<std::string, double>>& p_values, double alpha);

}  // namespace cagen
