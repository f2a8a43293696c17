#include "cagen/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cagen/verify.hpp"

namespace cagen {

namespace {

std::string reference_key(Strategy s) {
  return s == Strategy::Sca ? "SCA" : "QLSCA";
}

StrategyAggregate aggregate(Strategy strategy, std::vector<RunReport> runs) {
  StrategyAggregate agg;
  agg.strategy = strategy;
  agg.runs = std::move(runs);
  long long total = 0;
  double wall = 0.0;
  agg.best_size = agg.runs.front().size;
  for (const RunReport& r : agg.runs) {
    agg.best_size = std::min(agg.best_size, r.size);
    total += r.size;
    wall += static_cast<double>(r.wall_millis);
  }
  const double n = static_cast<double>(agg.runs.size());
  agg.mean_size = static_cast<double>(total) / n;
  double ss = 0.0;
  for (const RunReport& r : agg.runs) {
    const double d = static_cast<double>(r.size) - agg.mean_size;
    ss += d * d;
  }
  agg.std_dev = std::sqrt(ss / n);
  agg.mean_wall_millis = wall / n;
  return agg;
}

}  // namespace

BenchmarkResult run_benchmark(const BenchmarkSpec& spec,
                              const EngineConfig& base, int parallelism) {
  if (spec.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  if (parallelism < 1) parallelism = 1;

  struct Task {
    Strategy strategy;
    int run_index;
  };
  std::vector<Task> tasks;
  for (const Strategy s : spec.strategies) {
    for (int i = 0; i < spec.repetitions; ++i) tasks.push_back({s, i});
  }

  std::vector<RunReport> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string error;

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      const Task task = tasks[idx];
      try {
        EngineConfig ecfg = base;
        ecfg.seed = spec.base_seed + static_cast<std::uint64_t>(task.run_index);
        RunReport report = generate(spec.config, ecfg, task.strategy);
        const VerifyReport check = verify_suite(report.suite);
        if (!check.complete || !check.structural_errors.empty()) {
          throw std::runtime_error(
              spec.name + " " + strategy_name(task.strategy) + " run " +
              std::to_string(task.run_index) + " (seed " +
              std::to_string(ecfg.seed) + ") failed verification: " +
              std::to_string(check.missing.size()) + " tuples missing");
        }
        slots[idx] = std::move(report);
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (error.empty()) error = e.what();
        next.store(tasks.size());
        return;
      }
    }
  };

  const int workers =
      std::min<int>(parallelism, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (!error.empty()) throw std::runtime_error(error);

  BenchmarkResult result;
  result.spec = spec;
  std::size_t offset = 0;
  for (const Strategy s : spec.strategies) {
    std::vector<RunReport> runs(
        std::make_move_iterator(slots.begin() + offset),
        std::make_move_iterator(slots.begin() + offset + spec.repetitions));
    offset += spec.repetitions;
    result.per_strategy.push_back(aggregate(s, std::move(runs)));
  }
  return result;
}

void write_per_run_csv(std::ostream& out, const BenchmarkResult& result,
                       bool zero_wall_time) {
  out << "run_index,strategy,seed,size,wall_millis,rounds,fallback_count,"
         "op_sine,op_cosine,op_levy,op_crossover\n";
  for (const StrategyAggregate& agg : result.per_strategy) {
    for (std::size_t i = 0; i < agg.runs.size(); ++i) {
      const RunReport& r = agg.runs[i];
      out << i << ',' << strategy_name(agg.strategy) << ',' << r.seed << ','
          << r.size << ',' << (zero_wall_time ? 0 : r.wall_millis) << ','
          << r.rounds << ',' << r.fallback_rows;
      for (const std::uint64_t c : r.operator_counts) out << ',' << c;
      out << '\n';
    }
  }
}

namespace {

void write_number(std::ostream& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  out << buf;
}

}  // namespace

void write_summary_header(std::ostream& out) {
  out << "benchmark,strategy,best,mean,std,reference_best,reference_mean,"
         "best_vs_reference\n";
}

void write_summary_rows(std::ostream& out, const BenchmarkResult& result) {
  for (const StrategyAggregate& agg : result.per_strategy) {
    out << result.spec.name << ',' << strategy_name(agg.strategy) << ','
        << agg.best_size << ',';
    write_number(out, agg.mean_size);
    out << ',';
    write_number(out, agg.std_dev);
    out << ',';
    const auto ref = result.spec.reference_values.find(
        reference_key(agg.strategy));
    if (ref != result.spec.reference_values.end()) {
      out << static_cast<long long>(ref->second.best) << ',';
      write_number(out, ref->second.mean);
      out << ',';
      if (agg.best_size < ref->second.best) {
        out << "better";
      } else if (agg.best_size == ref->second.best) {
        out << "equal";
      } else {
        out << "worse";
      }
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_trace_csv(std::ostream& out, const RunReport& report) {
  const bool with_q = !report.qtable_trace.empty();
  out << "round,iteration,best_fitness";
  if (with_q) {
    for (int s = 0; s < 4; ++s) {
      for (int a = 0; a < 4; ++a) out << ",q_" << s << '_' << a;
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < report.convergence.size(); ++i) {
    const ConvergencePoint& p = report.convergence[i];
    out << p.round << ',' << p.iteration << ',' << p.best_fitness;
    if (with_q) {
      char buf[32];
      for (const double q : report.qtable_trace[i]) {
        std::snprintf(buf, sizeof buf, "%.6f", q);
        out << ',' << buf;
      }
    }
    out << '\n';
  }
}

bool glob_match(const std::string& pattern, const std::string& text) {
  // Iterative * backtracking.
  std::size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == '?' || pattern[p] == text[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace cagen
