#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "cagen/engine.hpp"
#include "cagen/tuplegen.hpp"
#include "cagen/verify.hpp"

using namespace cagen;

namespace {

EngineConfig small_engine(std::uint64_t seed) {
  EngineConfig ecfg;
  ecfg.seed = seed;
  return ecfg;
}

// Everything except wall time, which is the one nondeterministic field.
bool reports_equal(const RunReport& a, const RunReport& b) {
  if (a.suite.rows != b.suite.rows) return false;
  if (a.size != b.size || a.rounds != b.rounds) return false;
  if (a.fallback_rows != b.fallback_rows) return false;
  if (a.operator_counts != b.operator_counts) return false;
  if (a.convergence.size() != b.convergence.size()) return false;
  for (std::size_t i = 0; i < a.convergence.size(); ++i) {
    if (a.convergence[i].round != b.convergence[i].round ||
        a.convergence[i].iteration != b.convergence[i].iteration ||
        a.convergence[i].best_fitness != b.convergence[i].best_fitness) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("explore gate probabilities") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) CHECK(explore_gate(1, rng));
  CHECK_THROWS_AS(explore_gate(0, rng), std::logic_error);

  int explored = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) explored += explore_gate(4, rng) ? 1 : 0;
  CHECK(std::abs(explored / static_cast<double>(n) - 0.5) < 0.01);

  explored = 0;
  for (int i = 0; i < n; ++i) explored += explore_gate(100, rng) ? 1 : 0;
  CHECK(std::abs(explored / static_cast<double>(n) - 0.1) < 0.01);
}

TEST_CASE("population tracks the elite") {
  TupleStore store = build_store(CAConfig(2, {3, 2, 2, 2}));
  Rng rng(5);
  Population pop(10, store, rng);
  CHECK(pop.size() == 10);
  CHECK(pop.best_fitness() == 6);  // fresh store: every row covers 6 pairs

  store.remove_covered(pop.best());
  // A strictly worse replacement must not displace the elite.
  const TestCase elite = pop.best();
  pop.replace(0, pop.best(), 0);
  CHECK(pop.best() == elite);
  CHECK(pop.best_fitness() == 6);
}

TEST_CASE("an explore episode performs exactly four transitions") {
  // Single remaining tuple; members already cover it, so no operator can
  // strictly improve fitness and every reward is -1.
  const CAConfig cfg(2, {2, 2});
  TupleStore store = build_store(cfg);
  for (const TestCase& row : {TestCase{0, 1}, TestCase{1, 0}, TestCase{1, 1}}) {
    store.remove_covered(row);
  }
  REQUIRE(store.remaining() == 1);  // only (0,0) left

  Rng rng(17);
  Population pop(4, store, rng);
  for (int i = 0; i < pop.size(); ++i) pop.replace(i, {0, 0}, 1);

  QTable table(0.8, OperatorKind::Sine);
  const ScheduleParams sched = ScheduleParams::make(3.0, 100);
  std::array<std::uint64_t, 4> counts{};
  StepContext ctx;
  ctx.store = &store;
  ctx.table = &table;
  ctx.rng = &rng;
  ctx.sched = &sched;
  ctx.radius = 0.0;
  ctx.alpha = 0.7;
  ctx.operator_counts = &counts;

  const int best_before = pop.best_fitness();
  explore_episode(pop, 0, ctx);

  std::uint64_t total = 0;
  for (const std::uint64_t c : counts) total += c;
  CHECK(total == 4);
  CHECK(pop.best_fitness() >= best_before);

  // One visit per state: exactly 4 touched entries, all punished.
  int negative = 0, nonzero = 0;
  for (const double q : table.snapshot()) {
    if (q != 0.0) ++nonzero;
    if (q < 0.0) ++negative;
  }
  CHECK(nonzero == 4);
  CHECK(negative == 4);
}

TEST_CASE("an exploit step performs exactly one transition") {
  TupleStore store = build_store(CAConfig(2, {3, 2, 2, 2}));
  Rng rng(23);
  Population pop(4, store, rng);
  QTable table(0.8, OperatorKind::LevyFlight);
  const ScheduleParams sched = ScheduleParams::make(3.0, 100);
  std::array<std::uint64_t, 4> counts{};
  StepContext ctx;
  ctx.store = &store;
  ctx.table = &table;
  ctx.rng = &rng;
  ctx.sched = &sched;
  ctx.radius = 3.0;
  ctx.alpha = 1.0;
  ctx.operator_counts = &counts;

  exploit_step(pop, 1, ctx);
  std::uint64_t total = 0;
  for (const std::uint64_t c : counts) total += c;
  CHECK(total == 1);
  // The chosen action became the new state and was counted.
  CHECK(counts[static_cast<int>(table.state())] == 1);
}

TEST_CASE("row selection finds the full-coverage row on a fresh store") {
  TupleStore store = build_store(CAConfig(2, {3, 2, 2, 2}));
  EngineConfig ecfg = small_engine(7);
  Rng rng(ecfg.seed);
  QTable table(ecfg.gamma, OperatorKind::Sine);
  const TestCase row = qlsca_select_row(store, ecfg, table, rng);
  CHECK(store.fitness(row) == 6);
}

TEST_CASE("row selection covers a single remaining tuple") {
  // Full-strength store: each row covers exactly one tuple, so removing all
  // rows but one leaves a single target.
  TupleStore store = build_store(CAConfig(3, {3, 3, 3}));
  const TestCase target{2, 1, 0};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const TestCase row{a, b, c};
        if (row != target) store.remove_covered(row);
      }
    }
  }
  REQUIRE(store.remaining() == 1);

  EngineConfig ecfg = small_engine(99);
  Rng rng(ecfg.seed);
  QTable table(ecfg.gamma, OperatorKind::Sine);
  const TestCase row = qlsca_select_row(store, ecfg, table, rng);
  CHECK(store.fitness(row) == 1);
}

TEST_CASE("full-strength arrays degenerate to exhaustion") {
  const CAConfig cfg(2, {2, 2});
  for (const Strategy strategy : {Strategy::Qlsca, Strategy::Sca}) {
    const RunReport report = generate(cfg, small_engine(3), strategy);
    CHECK(report.size == 4);  // t = k: every row covers exactly one tuple
    CHECK(report.rounds == 4);
    CHECK(verify_suite(report.suite).complete);
  }
}

TEST_CASE("generated suites always verify") {
  Rng seeds(2026);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = seeds.uniform_int(2, 6);
    const int t = seeds.uniform_int(2, std::min(3, k));
    std::vector<int> card(k);
    for (int& v : card) v = seeds.uniform_int(2, 4);
    const CAConfig cfg(t, card);
    const Strategy strategy =
        trial % 2 == 0 ? Strategy::Qlsca : Strategy::Sca;

    const RunReport report =
        generate(cfg, small_engine(seeds.next_u64()), strategy);
    const VerifyReport check = verify_suite(report.suite);
    CHECK(check.complete);
    CHECK(report.size == static_cast<int>(report.suite.rows.size()));
    CHECK(report.size >= static_cast<int>(size_lower_bound(cfg)));

    // Replaying the suite drains a fresh store completely: conservation.
    TupleStore replay = build_store(cfg);
    const std::uint64_t initial = replay.remaining();
    std::uint64_t removed = 0;
    for (const TestCase& row : report.suite.rows) {
      removed += static_cast<std::uint64_t>(replay.remove_covered(row));
    }
    CHECK(removed == initial);
    CHECK(replay.remaining() == 0);
  }
}

TEST_CASE("identical seeds give identical reports") {
  const CAConfig cfg(2, {3, 3, 3, 3});
  for (const Strategy strategy : {Strategy::Qlsca, Strategy::Sca}) {
    const RunReport a = generate(cfg, small_engine(1234), strategy);
    const RunReport b = generate(cfg, small_engine(1234), strategy);
    CHECK(reports_equal(a, b));
    const RunReport c = generate(cfg, small_engine(1235), strategy);
    CHECK(a.seed != c.seed);
  }
}

TEST_CASE("recorded best fitness never decreases within a round") {
  const RunReport report =
      generate(CAConfig(2, {3, 3, 3, 3}), small_engine(55), Strategy::Qlsca);
  for (std::size_t i = 1; i < report.convergence.size(); ++i) {
    const auto& prev = report.convergence[i - 1];
    const auto& cur = report.convergence[i];
    if (prev.round == cur.round) CHECK(cur.best_fitness >= prev.best_fitness);
  }
}

TEST_CASE("operator counts cover all four operators on qlsca runs") {
  const RunReport report = generate(CAConfig(2, std::vector<int>(13, 3)),
                                    small_engine(9), Strategy::Qlsca);
  std::uint64_t total = 0;
  for (const std::uint64_t c : report.operator_counts) {
    CHECK(c > 0);
    total += c;
  }
  CHECK(total > 0);
  CHECK(verify_suite(report.suite).complete);
}

TEST_CASE("sca runs use only sine and cosine") {
  const RunReport report = generate(CAConfig(2, {3, 3, 3, 3}),
                                    small_engine(10), Strategy::Sca);
  CHECK(report.operator_counts[static_cast<int>(OperatorKind::Sine)] > 0);
  CHECK(report.operator_counts[static_cast<int>(OperatorKind::Cosine)] > 0);
  CHECK(report.operator_counts[static_cast<int>(OperatorKind::LevyFlight)] ==
        0);
  CHECK(report.operator_counts[static_cast<int>(OperatorKind::Crossover)] ==
        0);
}

TEST_CASE("qtable trace aligns with the convergence trace") {
  EngineConfig ecfg = small_engine(77);
  ecfg.record_qtable = true;
  const RunReport report =
      generate(CAConfig(2, {3, 3, 3}), ecfg, Strategy::Qlsca);
  CHECK(report.qtable_trace.size() == report.convergence.size());

  EngineConfig plain = small_engine(77);
  const RunReport quiet =
      generate(CAConfig(2, {3, 3, 3}), plain, Strategy::Qlsca);
  CHECK(quiet.qtable_trace.empty());
  // Tracing must not change the search itself.
  CHECK(quiet.suite.rows == report.suite.rows);
}

TEST_CASE("qtable reset flag still yields valid suites") {
  EngineConfig ecfg = small_engine(31);
  ecfg.qtable_reset_per_round = true;
  const RunReport report =
      generate(CAConfig(2, {3, 3, 3, 3}), ecfg, Strategy::Qlsca);
  CHECK(verify_suite(report.suite).complete);
}

TEST_CASE("early exit does not change the selected rows") {
  // The elite only moves on strict improvement, so stopping at the cap robs
  // the round of nothing; with a single round the full suite matches.
  const CAConfig cfg(2, {2, 2, 2});
  EngineConfig eager = small_engine(8);
  EngineConfig patient = small_engine(8);
  patient.early_exit = false;

  TupleStore store_a = build_store(cfg);
  TupleStore store_b = build_store(cfg);
  Rng rng_a(8), rng_b(8);
  QTable table_a(0.8, OperatorKind::Sine), table_b(0.8, OperatorKind::Sine);
  const TestCase row_a = qlsca_select_row(store_a, eager, table_a, rng_a);
  const TestCase row_b = qlsca_select_row(store_b, patient, table_b, rng_b);
  CHECK(row_a == row_b);
}

TEST_CASE("engine config validation") {
  const CAConfig cfg(2, {2, 2});
  EngineConfig bad = small_engine(1);
  bad.population_size = 1;
  CHECK_THROWS_AS(generate(cfg, bad, Strategy::Qlsca), std::invalid_argument);
  bad = small_engine(1);
  bad.max_iterations = 0;
  CHECK_THROWS_AS(generate(cfg, bad, Strategy::Qlsca), std::invalid_argument);
  bad = small_engine(1);
  bad.gamma = 1.5;
  CHECK_THROWS_AS(generate(cfg, bad, Strategy::Qlsca), std::invalid_argument);
}
