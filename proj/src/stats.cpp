#include "cagen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cagen {

namespace {

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

RankSumResult wilcoxon_rank_sum(const std::vector<double>& a,
                                const std::vector<double>& b) {
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  if (n1 < 10 || n2 < 10) {
    throw std::invalid_argument(
        "wilcoxon_rank_sum needs >= 10 observations per sample");
  }
  const std::size_t n = n1 + n2;

  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return pooled[x] < pooled[y];
                   });

  // Midranks plus the tie correction term sum(t^3 - t).
  std::vector<double> ranks(n);
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double midrank = (static_cast<double>(i + j)) / 2.0 + 1.0;
    for (std::size_t l = i; l <= j; ++l) ranks[order[l]] = midrank;
    const double ties = static_cast<double>(j - i + 1);
    tie_term += ties * ties * ties - ties;
    i = j + 1;
  }

  double rank_sum_a = 0.0;
  for (std::size_t l = 0; l < n1; ++l) rank_sum_a += ranks[l];

  const double fn1 = static_cast<double>(n1);
  const double fn2 = static_cast<double>(n2);
  const double fn = static_cast<double>(n);
  const double u1 = rank_sum_a - fn1 * (fn1 + 1.0) / 2.0;
  const double u2 = fn1 * fn2 - u1;
  const double mu = fn1 * fn2 / 2.0;
  const double variance =
      fn1 * fn2 / 12.0 * ((fn + 1.0) - tie_term / (fn * (fn - 1.0)));

  RankSumResult result;
  if (variance <= 0.0) {
    // Every pooled value identical: no evidence either way.
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  const double sd = std::sqrt(variance);
  const double centered = u1 - mu;
  const double shift = centered > 0.0 ? 0.5 : (centered < 0.0 ? -0.5 : 0.0);
  result.statistic = (centered - shift) / sd;
  const double z = (std::max(u1, u2) - mu - 0.5) / sd;
  result.p_value = std::min(1.0, 2.0 * normal_sf(z));
  return result;
}

std::vector<HolmDecision> bonferroni_holm(
    const std::vector<std::pair<std::string, double>>& p_values,
    double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  std::vector<HolmDecision> out;
  out.reserve(p_values.size());
  for (const auto& [label, p] : p_values) {
    out.push_back({label, p, 0.0, false});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HolmDecision& x, const HolmDecision& y) {
                     return x.p_value < y.p_value;
                   });
  const std::size_t m = out.size();
  bool alive = true;
  for (std::size_t i = 0; i < m; ++i) {
    out[i].threshold = alpha / static_cast<double>(m - i);
    out[i].reject = alive && out[i].p_value <= out[i].threshold;
    if (!out[i].reject) alive = false;
  }
  return out;
}

}  // namespace cagen
