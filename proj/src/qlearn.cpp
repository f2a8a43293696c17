#include "cagen/qlearn.hpp"

#include <algorithm>
#include <stdexcept>

namespace cagen {

double alpha_schedule(int iteration, int max_iterations) {
  return 1.0 - 0.9 * static_cast<double>(iteration) /
                   static_cast<double>(max_iterations);
}

double reward(int old_fitness, int new_fitness) {
  return new_fitness > old_fitness ? 1.0 : -1.0;
}

QTable::QTable(double gamma, OperatorKind initial_state)
    : gamma_(gamma), state_(initial_state) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
}

double QTable::value(OperatorKind s, OperatorKind a) const {
  return q_[static_cast<int>(s)][static_cast<int>(a)];
}

void QTable::set_value(OperatorKind s, OperatorKind a, double v) {
  q_[static_cast<int>(s)][static_cast<int>(a)] = v;
}

double QTable::row_max(OperatorKind s) const {
  const auto& row = q_[static_cast<int>(s)];
  return *std::max_element(row.begin(), row.end());
}

double QTable::update(OperatorKind s, OperatorKind a, double reward,
                      double alpha) {
  double& entry = q_[static_cast<int>(s)][static_cast<int>(a)];
  entry += alpha * (reward + gamma_ * row_max(a) - entry);
  state_ = a;
  return entry;
}

OperatorKind QTable::best_action(OperatorKind s, Rng& rng) const {
  const auto& row = q_[static_cast<int>(s)];
  const double top = *std::max_element(row.begin(), row.end());
  int candidates[4];
  int n = 0;
  for (int a = 0; a < 4; ++a) {
    if (row[a] == top) candidates[n++] = a;
  }
  const int pick = n == 1 ? candidates[0] : candidates[rng.uniform_int(0, n - 1)];
  return static_cast<OperatorKind>(pick);
}

void QTable::reset(OperatorKind new_state) {
  for (auto& row : q_) row.fill(0.0);
  state_ = new_state;
}

std::array<double, 16> QTable::snapshot() const {
  std::array<double, 16> out{};
  for (int s = 0; s < 4; ++s) {
    for (int a = 0; a < 4; ++a) out[s * 4 + a] = q_[s][a];
  }
  return out;
}

}  // namespace cagen
