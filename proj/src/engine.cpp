#include "cagen/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "cagen/tuplegen.hpp"

namespace cagen {

const char* strategy_name(Strategy s) {
  return s == Strategy::Sca ? "sca" : "qlsca";
}

TestCase random_test_case(const CAConfig& cfg, Rng& rng) {
  TestCase tc(cfg.parameter_count());
  for (int i = 0; i < cfg.parameter_count(); ++i) {
    tc[i] = rng.uniform_int(0, cfg.cardinalities[i] - 1);
  }
  return tc;
}

Population::Population(int size, const TupleStore& store, Rng& rng) {
  members_.reserve(size);
  fitnesses_.reserve(size);
  for (int i = 0; i < size; ++i) {
    members_.push_back(random_test_case(store.config(), rng));
    fitnesses_.push_back(store.fitness(members_.back()));
  }
  elect_best();
}

void Population::replace(int i, TestCase tc, int fitness) {
  members_[i] = std::move(tc);
  fitnesses_[i] = fitness;
  if (fitness > best_fitness_) {
    best_ = members_[i];
    best_fitness_ = fitness;
  }
}

void Population::elect_best() {
  int best = 0;
  for (int i = 1; i < size(); ++i) {
    if (fitnesses_[i] > fitnesses_[best]) best = i;
  }
  best_ = members_[best];
  best_fitness_ = fitnesses_[best];
}

void Population::rescore(const TupleStore& store) {
  for (int i = 0; i < size(); ++i) {
    fitnesses_[i] = store.fitness(members_[i]);
  }
  elect_best();
}

bool explore_gate(int iteration, Rng& rng) {
  if (iteration < 1) {
    throw std::logic_error("explore_gate iterations are 1-based");
  }
  return rng.uniform01() < 1.0 / std::sqrt(static_cast<double>(iteration));
}

namespace {

TestCase apply_operator(OperatorKind op, Population& pop, int member,
                        const StepContext& ctx) {
  const CAConfig& cfg = ctx.store->config();
  switch (op) {
    case OperatorKind::Sine:
      return sine_update(pop.member(member), pop.best(), ctx.radius, *ctx.rng,
                         cfg);
    case OperatorKind::Cosine:
      return cosine_update(pop.member(member), pop.best(), ctx.radius,
                           *ctx.rng, cfg);
    case OperatorKind::LevyFlight:
      return levy_update(pop.member(member), *ctx.rng, *ctx.sched, cfg);
    case OperatorKind::Crossover: {
      if (pop.size() == 1) return pop.member(member);  // no distinct partner
      int partner = ctx.rng->uniform_int(0, pop.size() - 2);
      if (partner >= member) ++partner;
      return crossover_update(pop.member(member), pop.member(partner),
                              *ctx.rng);
    }
  }
  throw std::logic_error("unknown operator");
}

// One state-action transition: greedy action from state s, operator applied
// to the member, reward from the member's own fitness change, Q-update.
void transition(Population& pop, int member, const StepContext& ctx,
                OperatorKind s) {
  const OperatorKind a = ctx.table->best_action(s, *ctx.rng);
  const int old_fitness = pop.fitness(member);
  TestCase next = apply_operator(a, pop, member, ctx);
  const int new_fitness = ctx.store->fitness(next);
  ctx.table->update(s, a, reward(old_fitness, new_fitness), ctx.alpha);
  pop.replace(member, std::move(next), new_fitness);
  ++(*ctx.operator_counts)[static_cast<int>(a)];
}

// Most a single row can still cover: one tuple per bucket, and never more
// than what remains.
int row_fitness_cap(const TupleStore& store) {
  return static_cast<int>(
      std::min<std::uint64_t>(store.bucket_count(), store.remaining()));
}

struct TraceSink {
  RunReport* report = nullptr;
  int round = 0;
  const QTable* table = nullptr;
  bool record_qtable = false;

  void point(int iteration, int best_fitness) const {
    if (!report) return;
    report->convergence.push_back({round, iteration, best_fitness});
    if (record_qtable && table) {
      report->qtable_trace.push_back(table->snapshot());
    }
  }
};

TestCase fallback_row(const TupleStore& store, Rng& rng) {
  const auto tup = store.any_uncovered();
  if (!tup) throw std::logic_error("fallback requested on an empty store");
  const CAConfig& cfg = store.config();
  TestCase row(cfg.parameter_count());
  for (int i = 0; i < cfg.parameter_count(); ++i) {
    row[i] = (tup->mask >> i) & 1u ? tup->assignment[i]
                                   : rng.uniform_int(0, cfg.cardinalities[i] - 1);
  }
  return row;
}

void validate(const EngineConfig& ecfg) {
  if (ecfg.population_size < 2) {
    throw std::invalid_argument("population_size must be >= 2");
  }
  if (ecfg.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (ecfg.gamma < 0.0 || ecfg.gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
}

}  // namespace

void explore_episode(Population& pop, int member, const StepContext& ctx) {
  std::array<OperatorKind, 4> states{OperatorKind::Sine, OperatorKind::Cosine,
                                     OperatorKind::LevyFlight,
                                     OperatorKind::Crossover};
  ctx.rng->shuffle(states);
  for (const OperatorKind s : states) transition(pop, member, ctx, s);
}

void exploit_step(Population& pop, int member, const StepContext& ctx) {
  transition(pop, member, ctx, ctx.table->state());
}

TestCase qlsca_select_row(Population& pop, TupleStore& store,
                          const EngineConfig& ecfg, QTable& table, Rng& rng,
                          RunReport* report, int round) {
  validate(ecfg);
  const ScheduleParams sched = ecfg.schedule();
  const int cap = row_fitness_cap(store);
  std::array<std::uint64_t, 4> scratch{};
  auto* counts = report ? &report->operator_counts : &scratch;
  const TraceSink trace{report, round, &table, ecfg.record_qtable};

  if (ecfg.early_exit && pop.best_fitness() >= cap) {
    trace.point(0, pop.best_fitness());
    return pop.best();
  }
  for (int iter = 1; iter <= ecfg.max_iterations; ++iter) {
    StepContext ctx;
    ctx.store = &store;
    ctx.table = &table;
    ctx.rng = &rng;
    ctx.sched = &sched;
    ctx.radius = radius(iter - 1, sched);
    ctx.alpha = alpha_schedule(iter - 1, ecfg.max_iterations);
    ctx.operator_counts = counts;
    for (int m = 0; m < pop.size(); ++m) {
      if (explore_gate(iter, rng)) {
        explore_episode(pop, m, ctx);
      } else {
        exploit_step(pop, m, ctx);
      }
      if (ecfg.early_exit && pop.best_fitness() >= cap) {
        trace.point(iter, pop.best_fitness());
        return pop.best();
      }
    }
    trace.point(iter, pop.best_fitness());
  }
  return pop.best();
}

TestCase sca_select_row(Population& pop, TupleStore& store,
                        const EngineConfig& ecfg, Rng& rng, RunReport* report,
                        int round) {
  validate(ecfg);
  const ScheduleParams sched = ecfg.schedule();
  const CAConfig& cfg = store.config();
  const int cap = row_fitness_cap(store);
  std::array<std::uint64_t, 4> scratch{};
  auto* counts = report ? &report->operator_counts : &scratch;
  const TraceSink trace{report, round, nullptr, false};

  if (ecfg.early_exit && pop.best_fitness() >= cap) {
    trace.point(0, pop.best_fitness());
    return pop.best();
  }
  for (int iter = 1; iter <= ecfg.max_iterations; ++iter) {
    const double r = radius(iter - 1, sched);
    for (int m = 0; m < pop.size(); ++m) {
      const bool sine = rng.uniform01() < 0.5;
      TestCase next = sine
                          ? sine_update(pop.member(m), pop.best(), r, rng, cfg)
                          : cosine_update(pop.member(m), pop.best(), r, rng, cfg);
      const int fit = store.fitness(next);
      pop.replace(m, std::move(next), fit);
      ++(*counts)[sine ? static_cast<int>(OperatorKind::Sine)
                       : static_cast<int>(OperatorKind::Cosine)];
      if (ecfg.early_exit && pop.best_fitness() >= cap) {
        trace.point(iter, pop.best_fitness());
        return pop.best();
      }
    }
    trace.point(iter, pop.best_fitness());
  }
  return pop.best();
}

TestCase qlsca_select_row(TupleStore& store, const EngineConfig& ecfg,
                          QTable& table, Rng& rng, RunReport* report,
                          int round) {
  Population pop(ecfg.population_size, store, rng);
  return qlsca_select_row(pop, store, ecfg, table, rng, report, round);
}

TestCase sca_select_row(TupleStore& store, const EngineConfig& ecfg, Rng& rng,
                        RunReport* report, int round) {
  Population pop(ecfg.population_size, store, rng);
  return sca_select_row(pop, store, ecfg, rng, report, round);
}

RunReport generate(const CAConfig& cfg, const EngineConfig& ecfg,
                   Strategy strategy) {
  validate(ecfg);
  const auto start = std::chrono::steady_clock::now();

  TupleStore store = build_store(cfg);
  Rng rng(ecfg.seed);

  RunReport report;
  report.seed = ecfg.seed;
  report.strategy = strategy;
  report.suite.config = cfg;

  std::optional<QTable> table;
  if (strategy == Strategy::Qlsca) {
    table.emplace(ecfg.gamma,
                  static_cast<OperatorKind>(rng.uniform_int(0, 3)));
  }

  std::optional<Population> pop;
  while (store.remaining() > 0) {
    const int round = report.rounds + 1;
    if (table && ecfg.qtable_reset_per_round && round > 1) {
      table->reset(static_cast<OperatorKind>(rng.uniform_int(0, 3)));
    }
    if (!pop || !ecfg.persistent_population) {
      pop.emplace(ecfg.population_size, store, rng);
    } else {
      pop->rescore(store);
    }
    TestCase row =
        table
            ? qlsca_select_row(*pop, store, ecfg, *table, rng, &report, round)
            : sca_select_row(*pop, store, ecfg, rng, &report, round);
    int removed = store.remove_covered(row);
    if (removed == 0) {
      // The search budget produced a useless row; build one straight from an
      // uncovered tuple so every round makes progress.
      row = fallback_row(store, rng);
      ++report.fallback_rows;
      removed = store.remove_covered(row);
    }
    report.suite.rows.push_back(std::move(row));
    report.rounds = round;
  }

  report.size = static_cast<int>(report.suite.rows.size());
  report.wall_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

}  // namespace cagen
