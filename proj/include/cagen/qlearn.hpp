#pragma once

#include <array>

#include "cagen/operators.hpp"
#include "cagen/rng.hpp"

namespace cagen {

// Learning-rate schedule 1 - 0.9*t/T: starts at 1.0, ends at 0.1.
double alpha_schedule(int iteration, int max_iterations);

// +1 on strict fitness improvement, -1 otherwise.
double reward(int old_fitness, int new_fitness);

// 4x4 state-action values over the operator set. The action taken becomes
// the next state, so the lookahead max in an update runs over the chosen
// action's row.
class QTable {
 public:
  QTable(double gamma, OperatorKind initial_state);

  double value(OperatorKind s, OperatorKind a) const;
  void set_value(OperatorKind s, OperatorKind a, double v);

  // q[s][a] += alpha * (reward + gamma * max_a' q[a][a'] - q[s][a]);
  // advances the current state to a and returns the new entry.
  double update(OperatorKind s, OperatorKind a, double reward, double alpha);

  // Argmax over row s; exact ties are broken uniformly at random.
  OperatorKind best_action(OperatorKind s, Rng& rng) const;

  OperatorKind state() const { return state_; }
  void set_state(OperatorKind s) { state_ = s; }
  double gamma() const { return gamma_; }

  // Zeroes every entry and restarts from the given state.
  void reset(OperatorKind new_state);

  // Row-major copy of the 16 entries.
  std::array<double, 16> snapshot() const;

 private:
  double row_max(OperatorKind s) const;

  std::array<std::array<double, 4>, 4> q_{};
  double gamma_ = 0.8;
  OperatorKind state_ = OperatorKind::Sine;
};

}  // namespace cagen
