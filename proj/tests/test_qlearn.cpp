#include <doctest.h>

#include <cmath>

#include "cagen/qlearn.hpp"

using namespace cagen;

TEST_CASE("learning rate schedule") {
  CHECK(alpha_schedule(0, 100) == 1.0);
  CHECK(alpha_schedule(100, 100) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(alpha_schedule(50, 100) == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("reward is +1 only on strict improvement") {
  CHECK(reward(5, 6) == 1.0);
  CHECK(reward(5, 5) == -1.0);
  CHECK(reward(5, 3) == -1.0);
}

TEST_CASE("q-update reproduces the hand-worked numbers") {
  QTable table(0.10, OperatorKind::Sine);
  table.set_value(OperatorKind::Sine, OperatorKind::Cosine, 1.22);
  table.set_value(OperatorKind::Cosine, OperatorKind::Sine, 0.00);
  table.set_value(OperatorKind::Cosine, OperatorKind::Cosine, -1.11);
  table.set_value(OperatorKind::Cosine, OperatorKind::LevyFlight, 1.00);
  table.set_value(OperatorKind::Cosine, OperatorKind::Crossover, -1.00);

  const double updated =
      table.update(OperatorKind::Sine, OperatorKind::Cosine, -1.0, 0.70);
  CHECK(std::abs(updated - (-0.264)) < 1e-12);
  CHECK(table.value(OperatorKind::Sine, OperatorKind::Cosine) == updated);
  CHECK(table.state() == OperatorKind::Cosine);  // the action becomes state
}

TEST_CASE("q-update fixed points") {
  QTable table(0.8, OperatorKind::Sine);
  // All-zero table with zero reward stays zero.
  CHECK(table.update(OperatorKind::Sine, OperatorKind::LevyFlight, 0.0, 0.7) ==
        0.0);
  // Zero learning rate never moves an entry.
  table.set_value(OperatorKind::Cosine, OperatorKind::Sine, 2.5);
  CHECK(table.update(OperatorKind::Cosine, OperatorKind::Sine, -1.0, 0.0) ==
        2.5);
  // alpha = 1, gamma = 0 writes the reward through.
  QTable direct(0.0, OperatorKind::Sine);
  CHECK(direct.update(OperatorKind::Sine, OperatorKind::Sine, -1.0, 1.0) ==
        -1.0);
  CHECK(direct.update(OperatorKind::Sine, OperatorKind::Cosine, 1.0, 1.0) ==
        1.0);
}

TEST_CASE("best action is the row argmax") {
  QTable table(0.10, OperatorKind::Sine);
  table.set_value(OperatorKind::Sine, OperatorKind::Sine, 0.0);
  table.set_value(OperatorKind::Sine, OperatorKind::Cosine, -1.11);
  table.set_value(OperatorKind::Sine, OperatorKind::LevyFlight, 1.00);
  table.set_value(OperatorKind::Sine, OperatorKind::Crossover, -1.00);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    CHECK(table.best_action(OperatorKind::Sine, rng) ==
          OperatorKind::LevyFlight);
  }
}

TEST_CASE("ties break uniformly") {
  QTable table(0.8, OperatorKind::Sine);
  Rng rng(2024);
  int counts[4] = {};
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    ++counts[static_cast<int>(table.best_action(OperatorKind::Sine, rng))];
  }
  // Chi-squared against uniform, 3 dof; 16.27 is the 0.1% cut-off.
  double chi2 = 0.0;
  const double expected = n / 4.0;
  for (const int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi2 < 16.27);
}

TEST_CASE("argmax distribution is shift invariant") {
  QTable a(0.8, OperatorKind::Sine);
  QTable b(0.8, OperatorKind::Sine);
  a.set_value(OperatorKind::Sine, OperatorKind::Sine, 0.5);
  a.set_value(OperatorKind::Sine, OperatorKind::Cosine, 0.5);
  a.set_value(OperatorKind::Sine, OperatorKind::LevyFlight, -1.0);
  for (int i = 0; i < 4; ++i) {
    b.set_value(OperatorKind::Sine, static_cast<OperatorKind>(i),
                a.value(OperatorKind::Sine, static_cast<OperatorKind>(i)) +
                    17.25);
  }
  Rng ra(555), rb(555);
  for (int i = 0; i < 2000; ++i) {
    CHECK(a.best_action(OperatorKind::Sine, ra) ==
          b.best_action(OperatorKind::Sine, rb));
  }
}

TEST_CASE("entries stay inside the contraction bound") {
  // With |reward| = 1 and gamma = 0.8 every entry lives in [-5, 5].
  QTable table(0.8, OperatorKind::Sine);
  Rng rng(909);
  for (int i = 0; i < 100000; ++i) {
    const auto s = static_cast<OperatorKind>(rng.uniform_int(0, 3));
    const auto a = static_cast<OperatorKind>(rng.uniform_int(0, 3));
    const double r = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    const double alpha = rng.uniform01();
    const double value = table.update(s, a, r, alpha);
    CHECK(std::isfinite(value));
    CHECK(std::abs(value) <= 5.0 + 1e-9);
  }
  for (const double q : table.snapshot()) {
    CHECK(std::abs(q) <= 5.0 + 1e-9);
  }
}

TEST_CASE("reset zeroes the table") {
  QTable table(0.8, OperatorKind::Cosine);
  table.update(OperatorKind::Sine, OperatorKind::Sine, 1.0, 1.0);
  table.reset(OperatorKind::Crossover);
  CHECK(table.state() == OperatorKind::Crossover);
  for (const double q : table.snapshot()) CHECK(q == 0.0);
}
