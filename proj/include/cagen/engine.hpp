#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cagen/model.hpp"
#include "cagen/operators.hpp"
#include "cagen/qlearn.hpp"
#include "cagen/rng.hpp"
#include "cagen/tuple_store.hpp"

namespace cagen {

enum class Strategy { Sca, Qlsca };

const char* strategy_name(Strategy s);

struct EngineConfig {
  int population_size = 40;
  int max_iterations = 100;
  double magnitude = 3.0;
  double levy_beta = 1.5;
  double gamma = 0.8;
  std::uint64_t seed = 0;
  bool qtable_reset_per_round = false;
  // Keep one population across greedy rounds (rescored when the store
  // shrinks) instead of re-randomizing per round. Off by default: a
  // converged population strands the plain-SCA operators, which have no
  // mechanism to re-diversify.
  bool persistent_population = false;
  // Stop a row search as soon as some row covers everything a single row can
  // still cover; the returned row is unchanged because the elite is only
  // replaced on strict improvement.
  bool early_exit = true;
  bool record_qtable = false;

  ScheduleParams schedule() const {
    return ScheduleParams::make(magnitude, max_iterations, levy_beta);
  }
};

struct ConvergencePoint {
  int round = 0;
  int iteration = 0;
  int best_fitness = 0;
};

struct RunReport {
  TestSuite suite;
  int size = 0;
  std::int64_t wall_millis = 0;
  std::vector<ConvergencePoint> convergence;
  std::array<std::uint64_t, 4> operator_counts{};
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Qlsca;
  int rounds = 0;
  int fallback_rows = 0;  // rows synthesized when a search round found nothing
  std::vector<std::array<double, 16>> qtable_trace;  // when record_qtable
};

TestCase random_test_case(const CAConfig& cfg, Rng& rng);

// Candidate rows under optimization with cached fitness values and the
// best-so-far row. The elite is replaced only on strictly better fitness.
class Population {
 public:
  Population(int size, const TupleStore& store, Rng& rng);

  int size() const { return static_cast<int>(members_.size()); }
  const TestCase& member(int i) const { return members_[i]; }
  int fitness(int i) const { return fitnesses_[i]; }
  const TestCase& best() const { return best_; }
  int best_fitness() const { return best_fitness_; }

  void replace(int i, TestCase tc, int fitness);

  // Re-evaluates every member against a mutated store and re-elects the
  // elite; stale fitness against a shrunken store is a correctness bug.
  void rescore(const TupleStore& store);

 private:
  void elect_best();

  std::vector<TestCase> members_;
  std::vector<int> fitnesses_;
  TestCase best_;
  int best_fitness_ = 0;
};

// True (explore) with probability min(1, 1/sqrt(iteration)); iterations are
// 1-based here.
bool explore_gate(int iteration, Rng& rng);

// Shared context for one state-action transition.
struct StepContext {
  TupleStore* store = nullptr;
  QTable* table = nullptr;
  Rng* rng = nullptr;
  const ScheduleParams* sched = nullptr;
  double radius = 0.0;
  double alpha = 1.0;
  std::array<std::uint64_t, 4>* operator_counts = nullptr;
};

// Visits all four states in a random permutation; per visit: one greedy
// action pick, one operator application on the member, one reward, one
// Q-update. Exactly 4 applications and 4 updates.
void explore_episode(Population& pop, int member, const StepContext& ctx);

// A single state-action transition from the table's current state.
void exploit_step(Population& pop, int member, const StepContext& ctx);

// One greedy round: optimizes the population against the current store and
// returns the best row found.
TestCase qlsca_select_row(Population& pop, TupleStore& store,
                          const EngineConfig& ecfg, QTable& table, Rng& rng,
                          RunReport* report = nullptr, int round = 1);
TestCase sca_select_row(Population& pop, TupleStore& store,
                        const EngineConfig& ecfg, Rng& rng,
                        RunReport* report = nullptr, int round = 1);

// Same, starting from a fresh random population.
TestCase qlsca_select_row(TupleStore& store, const EngineConfig& ecfg,
                          QTable& table, Rng& rng, RunReport* report = nullptr,
                          int round = 1);
TestCase sca_select_row(TupleStore& store, const EngineConfig& ecfg, Rng& rng,
                        RunReport* report = nullptr, int round = 1);

// Greedy suite construction: select a row, append it, delete the tuples it
// covers, repeat until none remain. Every report passes the coverage
// verifier by construction.
RunReport generate(const CAConfig& cfg, const EngineConfig& ecfg,
                   Strategy strategy);

}  // namespace cagen
