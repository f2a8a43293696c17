#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cagen/bench.hpp"
#include "cagen/engine.hpp"
#include "cagen/notation.hpp"
#include "cagen/stats.hpp"
#include "cagen/verify.hpp"

namespace {

using namespace cagen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string sanitize(const std::string& name) {
  std::string out;
  for (const char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(c);
    } else if (c == '^') {
      out.push_back('p');
    } else if (c == ',' || c == ' ' || c == ';') {
      if (!out.empty() && out.back() != '_') out.push_back('_');
    }
  }
  return out;
}

std::string render_tuple(const InteractionTuple& tup) {
  std::string out = "(";
  for (std::size_t i = 0; i < tup.assignment.size(); ++i) {
    if (i > 0) out += ",";
    out += tup.assignment[i] == kDontCare ? "-"
                                          : std::to_string(tup.assignment[i]);
  }
  return out + ")";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "qlsca") return Strategy::Qlsca;
  if (name == "sca") return Strategy::Sca;
  throw CLI::ValidationError("--strategy", "must be qlsca or sca");
}

int default_parallelism() {
  if (const char* env = std::getenv("CAGEN_PARALLEL")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct GenerateOptions {
  std::string notation;
  std::string strategy = "qlsca";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int runs = 1;
  std::string out_path;
  std::string trace_path;
  EngineConfig engine;
};

int run_generate(const GenerateOptions& opt) {
  const CAConfig cfg = parse_ca_notation(opt.notation);
  const Strategy strategy = parse_strategy(opt.strategy);

  std::uint64_t seed = opt.seed;
  if (!opt.seed_given) {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cout << "seed " << seed << " (drawn from entropy)\n";
  }

  EngineConfig ecfg = opt.engine;
  ecfg.record_qtable = !opt.trace_path.empty() && strategy == Strategy::Qlsca;

  const RunReport* best = nullptr;
  std::vector<RunReport> reports;
  reports.reserve(opt.runs);
  for (int i = 0; i < opt.runs; ++i) {
    ecfg.seed = seed + static_cast<std::uint64_t>(i);
    reports.push_back(generate(cfg, ecfg, strategy));
    const RunReport& rep = reports.back();
    if (opt.runs > 1) {
      std::cout << "run " << i << ": size " << rep.size << " (seed "
                << rep.seed << ", " << rep.wall_millis << " ms)\n";
    }
    if (!best || rep.size < best->size) best = &rep;
  }

  const VerifyReport check = verify_suite(best->suite);
  if (!check.complete || !check.structural_errors.empty()) {
    std::cerr << "internal error: generated suite failed verification ("
              << check.missing.size() << " missing)\n";
    return kExitInternal;
  }

  std::cout << render_ca_notation(cfg) << ' ' << strategy_name(strategy)
            << " size " << best->size << " seed " << best->seed << " ("
            << best->wall_millis << " ms, verified)\n";

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw CLI::ValidationError("--out", "cannot open " + opt.out_path);
    write_suite_csv(out, best->suite);
  }
  if (!opt.trace_path.empty()) {
    std::ofstream out(opt.trace_path);
    if (!out) {
      throw CLI::ValidationError("--trace", "cannot open " + opt.trace_path);
    }
    write_trace_csv(out, *best);
  }
  return kExitOk;
}

int run_verify(const std::string& suite_path, const std::string& notation) {
  const CAConfig cfg = parse_ca_notation(notation);
  std::ifstream in(suite_path);
  if (!in) {
    std::cerr << "cannot open " << suite_path << '\n';
    return kExitUsage;
  }
  TestSuite suite;
  suite.config = cfg;
  suite.rows = read_suite_csv(in);

  const VerifyReport report = verify_suite(suite);
  std::cout << render_ca_notation(cfg) << ": " << suite.rows.size()
            << " rows, " << report.tuple_count << " tuples, "
            << report.missing.size() << " missing";
  if (!report.structural_errors.empty()) {
    std::cout << ", " << report.structural_errors.size()
              << " structural errors";
  }
  std::cout << (report.complete && report.structural_errors.empty()
                    ? " -> complete"
                    : " -> INCOMPLETE")
            << '\n';
  for (const std::string& err : report.structural_errors) {
    std::cout << "  structural: " << err << '\n';
  }
  const std::size_t show = std::min<std::size_t>(report.missing.size(), 10);
  for (std::size_t i = 0; i < show; ++i) {
    std::cout << "  missing " << render_tuple(report.missing[i]) << '\n';
  }
  if (report.missing.size() > show) {
    std::cout << "  ... " << (report.missing.size() - show) << " more\n";
  }
  return report.complete && report.structural_errors.empty()
             ? kExitOk
             : kExitVerifyFailed;
}

struct BenchOptions {
  std::string filter = "*";
  int repetitions = 30;
  int parallelism = 0;
  std::uint64_t base_seed = 1;
  std::string out_dir = "bench_out";
  std::string strategies = "qlsca,sca";
  bool traces = false;
  bool no_wall_time = false;
  EngineConfig engine;
};

std::vector<Strategy> parse_strategies(const std::string& csv) {
  std::vector<Strategy> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_strategy(item));
  }
  if (out.empty()) {
    throw CLI::ValidationError("--strategies", "no strategy given");
  }
  return out;
}

int run_bench(const BenchOptions& opt) {
  const int parallelism =
      opt.parallelism > 0 ? opt.parallelism : default_parallelism();
  const auto strategies = parse_strategies(opt.strategies);

  std::vector<BenchmarkSpec> selected;
  for (BenchmarkSpec& spec : builtin_suites()) {
    if (!glob_match(opt.filter, spec.name)) continue;
    spec.repetitions = opt.repetitions;
    spec.base_seed = opt.base_seed;
    spec.strategies = strategies;
    selected.push_back(std::move(spec));
  }
  if (selected.empty()) {
    std::cerr << "no benchmark matches filter '" << opt.filter << "'\n";
    return kExitUsage;
  }

  std::filesystem::create_directories(opt.out_dir);
  std::ofstream summary(std::filesystem::path(opt.out_dir) / "summary.csv");
  write_summary_header(summary);

  EngineConfig ecfg = opt.engine;
  ecfg.record_qtable = opt.traces;

  std::map<std::string, int> name_uses;
  for (const BenchmarkSpec& spec : selected) {
    std::cout << spec.name << " (" << spec.repetitions << " reps, "
              << parallelism << " workers)..." << std::flush;
    const BenchmarkResult result = run_benchmark(spec, ecfg, parallelism);

    std::string stem = sanitize(spec.name);
    const int uses = name_uses[stem]++;
    if (uses > 0) stem += "_" + std::to_string(uses + 1);

    std::ofstream per_run(std::filesystem::path(opt.out_dir) /
                          ("per_run_" + stem + ".csv"));
    write_per_run_csv(per_run, result, opt.no_wall_time);
    write_summary_rows(summary, result);

    for (const StrategyAggregate& agg : result.per_strategy) {
      std::cout << "  " << strategy_name(agg.strategy) << " best "
                << agg.best_size << " mean " << agg.mean_size;
      if (opt.traces) {
        for (std::size_t i = 0; i < agg.runs.size(); ++i) {
          std::ofstream trace(
              std::filesystem::path(opt.out_dir) /
              ("trace_" + stem + "_" +
               std::string(strategy_name(agg.strategy)) + "_" +
               std::to_string(i) + ".csv"));
          write_trace_csv(trace, agg.runs[i]);
        }
      }
    }
    std::cout << '\n';
  }
  return kExitOk;
}

struct StatsOptions {
  std::vector<std::string> files;
  std::string control = "qlsca";
  double alpha = 0.0;  // 0 means report both 0.05 and 0.10
};

std::map<std::string, std::vector<double>> sizes_by_strategy(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("stats", "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw CLI::ValidationError("stats", path + " is empty");
  }
  std::vector<std::string> header;
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) header.push_back(cell);
  int strategy_col = -1, size_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "strategy") strategy_col = static_cast<int>(i);
    if (header[i] == "size") size_col = static_cast<int>(i);
  }
  if (strategy_col < 0 || size_col < 0) {
    throw CLI::ValidationError("stats",
                               path + " lacks strategy/size columns");
  }
  std::map<std::string, std::vector<double>> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) <= std::max(strategy_col, size_col)) {
      continue;
    }
    out[cells[strategy_col]].push_back(std::stod(cells[size_col]));
  }
  return out;
}

int run_stats(const StatsOptions& opt) {
  std::vector<std::pair<std::string, double>> p_values;
  std::cout << "control: " << opt.control << '\n';
  for (const std::string& path : opt.files) {
    const auto groups = sizes_by_strategy(path);
    const auto control = groups.find(opt.control);
    if (control == groups.end()) {
      std::cerr << path << " has no '" << opt.control << "' runs\n";
      return kExitUsage;
    }
    std::string stem = std::filesystem::path(path).stem().string();
    if (stem.rfind("per_run_", 0) == 0) stem = stem.substr(8);
    for (const auto& [strategy, sizes] : groups) {
      if (strategy == opt.control) continue;
      const RankSumResult r = wilcoxon_rank_sum(control->second, sizes);
      std::cout << "  " << stem << ": " << opt.control << " vs " << strategy
                << "  z=" << r.statistic << "  p=" << r.p_value << '\n';
      p_values.emplace_back(stem + ":" + strategy, r.p_value);
    }
  }
  if (p_values.empty()) {
    std::cerr << "nothing to compare\n";
    return kExitUsage;
  }
  std::vector<double> alphas =
      opt.alpha > 0.0 ? std::vector<double>{opt.alpha}
                      : std::vector<double>{0.05, 0.10};
  for (const double alpha : alphas) {
    std::cout << "Holm decisions at alpha=" << alpha << ":\n";
    for (const HolmDecision& d : bonferroni_holm(p_values, alpha)) {
      std::cout << "  " << d.label << "  p=" << d.p_value << "  threshold="
                << d.threshold << "  " << (d.reject ? "reject" : "keep")
                << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering array generation, verification and benchmarking"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* cmd_gen =
      app.add_subcommand("generate", "generate a covering array");
  cmd_gen->add_option("notation", gen.notation,
                      "covering array, e.g. \"CA(2,3^13)\"")
      ->required();
  cmd_gen->add_option("--strategy", gen.strategy, "qlsca or sca")
      ->check(CLI::IsMember({"qlsca", "sca"}));
  cmd_gen->add_option("--seed", gen.seed, "base RNG seed");
  cmd_gen->add_option("--pop", gen.engine.population_size, "population size");
  cmd_gen->add_option("--iters", gen.engine.max_iterations,
                      "iterations per row");
  cmd_gen->add_option("--magnitude", gen.engine.magnitude,
                      "peak search radius");
  cmd_gen->add_option("--gamma", gen.engine.gamma, "Q-learning discount");
  cmd_gen->add_option("--runs", gen.runs, "independent runs; best kept")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--out", gen.out_path, "write the suite CSV here");
  cmd_gen->add_option("--trace", gen.trace_path,
                      "write the convergence trace CSV here");

  std::string verify_suite_path, verify_notation;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check a suite CSV for full coverage");
  cmd_verify->add_option("suite", verify_suite_path, "suite CSV path")
      ->required();
  cmd_verify->add_option("notation", verify_notation, "covering array")
      ->required();

  BenchOptions bench;
  CLI::App* cmd_bench =
      app.add_subcommand("bench", "run the built-in benchmark set");
  cmd_bench->add_option("--suite-filter", bench.filter,
                        "glob over benchmark names");
  cmd_bench->add_option("--reps", bench.repetitions, "runs per strategy")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_option("--parallel", bench.parallelism,
                        "worker threads (default: CAGEN_PARALLEL or cores)");
  cmd_bench->add_option("--base-seed", bench.base_seed,
                        "seed for run 0; run i uses base+i");
  cmd_bench->add_option("--out-dir", bench.out_dir, "output directory");
  cmd_bench->add_option("--strategies", bench.strategies,
                        "comma list of qlsca,sca");
  cmd_bench->add_flag("--traces", bench.traces,
                      "write per-run convergence traces");
  cmd_bench->add_flag("--no-wall-time", bench.no_wall_time,
                      "write 0 for wall_millis (reproducible output)");
  cmd_bench->add_option("--pop", bench.engine.population_size,
                        "population size");
  cmd_bench->add_option("--iters", bench.engine.max_iterations,
                        "iterations per row");
  cmd_bench->add_option("--magnitude", bench.engine.magnitude,
                        "peak search radius");
  cmd_bench->add_option("--gamma", bench.engine.gamma, "Q-learning discount");

  StatsOptions stats;
  CLI::App* cmd_stats = app.add_subcommand(
      "stats", "Wilcoxon rank-sum + Holm report over per-run CSVs");
  cmd_stats->add_option("files", stats.files, "per-run CSV files")
      ->required()
      ->expected(-1);
  cmd_stats->add_option("--control", stats.control, "control strategy name");
  cmd_stats->add_option("--alpha", stats.alpha,
                        "significance level (default: report 0.05 and 0.10)");

  try {
    app.parse(argc, argv);
    gen.seed_given = cmd_gen->count("--seed") > 0;
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_verify->parsed()) {
      return run_verify(verify_suite_path, verify_notation);
    }
    if (cmd_bench->parsed()) return run_bench(bench);
    if (cmd_stats->parsed()) return run_stats(stats);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const NotationError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
