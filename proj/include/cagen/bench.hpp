#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cagen/engine.hpp"
#include "cagen/model.hpp"

namespace cagen {

// Published best/mean pair used as a report reference column.
struct ReferenceEntry {
  double best = 0.0;
  double mean = 0.0;
};

struct BenchmarkSpec {
  std::string name;  // covering-array notation, doubles as the lookup key
  CAConfig config;
  int repetitions = 30;
  std::vector<Strategy> strategies{Strategy::Qlsca, Strategy::Sca};
  std::uint64_t base_seed = 1;
  // Keyed by strategy name (QLSCA, SCA, DPSO, PSTG, APSO, CS); entries the
  // sources do not report are simply absent.
  std::map<std::string, ReferenceEntry> reference_values;
};

struct StrategyAggregate {
  Strategy strategy = Strategy::Qlsca;
  std::vector<RunReport> runs;
  int best_size = 0;
  double mean_size = 0.0;
  double std_dev = 0.0;
  double mean_wall_millis = 0.0;
};

struct BenchmarkResult {
  BenchmarkSpec spec;
  std::vector<StrategyAggregate> per_strategy;  // in spec.strategies order
};

// Executes repetitions x strategies independent runs; run i uses seed
// base_seed + i. Every suite is re-checked by the coverage verifier and a
// failure aborts with a diagnostic. Results are keyed by run index, so the
// outcome does not depend on the parallelism level.
BenchmarkResult run_benchmark(const BenchmarkSpec& spec,
                              const EngineConfig& base, int parallelism);

// The built-in benchmark set with published reference columns.
std::vector<BenchmarkSpec> builtin_suites();

// Per-run CSV: run_index,strategy,seed,size,wall_millis,rounds,
// fallback_count,op_sine,op_cosine,op_levy,op_crossover. With
// zero_wall_time the timing column prints 0 so output is byte-reproducible.
void write_per_run_csv(std::ostream& out, const BenchmarkResult& result,
                       bool zero_wall_time = false);

// Summary CSV rows: benchmark,strategy,best,mean,std,reference_best,
// reference_mean,best_vs_reference.
void write_summary_header(std::ostream& out);
void write_summary_rows(std::ostream& out, const BenchmarkResult& result);

// Convergence trace: round,iteration,best_fitness, plus the 16 Q-table
// columns q_s_a when the run recorded them.
void write_trace_csv(std::ostream& out, const RunReport& report);

// Shell-style match with * and ? (used by the bench suite filter).
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace cagen
