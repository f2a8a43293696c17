#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cagen/bench.hpp"
#include "cagen/engine.hpp"
#include "cagen/notation.hpp"
#include "cagen/stats.hpp"
#include "cagen/tuplegen.hpp"
#include "cagen/verify.hpp"

namespace py = pybind11;

namespace {

using namespace cagen;

Strategy strategy_from_name(const std::string& name) {
  if (name == "qlsca") return Strategy::Qlsca;
  if (name == "sca") return Strategy::Sca;
  throw std::invalid_argument("strategy must be 'qlsca' or 'sca'");
}

CAConfig config_from(const std::string& notation) {
  return parse_ca_notation(notation);
}

// Compact verification result for python callers.
struct VerifySummary {
  bool complete = false;
  std::uint64_t tuple_count = 0;
  std::size_t missing_count = 0;
  std::vector<std::string> structural_errors;
};

VerifySummary verify_rows(const std::vector<TestCase>& rows,
                          const std::string& notation) {
  TestSuite suite;
  suite.config = config_from(notation);
  suite.rows = rows;
  const VerifyReport report = verify_suite(suite);
  return {report.complete && report.structural_errors.empty(),
          report.tuple_count, report.missing.size(),
          report.structural_errors};
}

}  // namespace

PYBIND11_MODULE(_cagen, m) {
  m.doc() = "covering array generation via Q-learning sine-cosine search";

  py::class_<CAConfig>(m, "CAConfig")
      .def(py::init([](int strength, std::vector<int> cardinalities) {
             return CAConfig(strength, std::move(cardinalities));
           }),
           py::arg("strength"), py::arg("cardinalities"))
      .def_readonly("strength", &CAConfig::strength)
      .def_readonly("cardinalities", &CAConfig::cardinalities)
      .def("__eq__", [](const CAConfig& a, const CAConfig& b) { return a == b; })
      .def("__repr__", [](const CAConfig& cfg) {
        return "CAConfig('" + render_ca_notation(cfg) + "')";
      });

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("size", &RunReport::size)
      .def_readonly("seed", &RunReport::seed)
      .def_readonly("rounds", &RunReport::rounds)
      .def_readonly("fallback_rows", &RunReport::fallback_rows)
      .def_readonly("wall_millis", &RunReport::wall_millis)
      .def_property_readonly(
          "rows", [](const RunReport& r) { return r.suite.rows; })
      .def_property_readonly("strategy",
                             [](const RunReport& r) {
                               return std::string(strategy_name(r.strategy));
                             })
      .def_property_readonly("operator_counts",
                             [](const RunReport& r) {
                               py::dict d;
                               for (int i = 0; i < kOperatorCount; ++i) {
                                 d[kOperatorNames[i]] = r.operator_counts[i];
                               }
                               return d;
                             })
      .def("__repr__", [](const RunReport& r) {
        return "RunReport(size=" + std::to_string(r.size) + ", seed=" +
               std::to_string(r.seed) + ")";
      });

  py::class_<VerifySummary>(m, "VerifySummary")
      .def_readonly("complete", &VerifySummary::complete)
      .def_readonly("tuple_count", &VerifySummary::tuple_count)
      .def_readonly("missing_count", &VerifySummary::missing_count)
      .def_readonly("structural_errors", &VerifySummary::structural_errors);

  m.def("parse_ca_notation", &config_from, py::arg("notation"));
  m.def("render_ca_notation", &render_ca_notation, py::arg("config"));

  m.def(
      "generate",
      [](const std::string& notation, const std::string& strategy,
         std::uint64_t seed, int population, int iterations, double magnitude,
         double gamma) {
        EngineConfig ecfg;
        ecfg.seed = seed;
        ecfg.population_size = population;
        ecfg.max_iterations = iterations;
        ecfg.magnitude = magnitude;
        ecfg.gamma = gamma;
        return generate(config_from(notation), ecfg,
                        strategy_from_name(strategy));
      },
      py::arg("notation"), py::arg("strategy") = "qlsca", py::arg("seed") = 0,
      py::arg("population") = 40, py::arg("iterations") = 100,
      py::arg("magnitude") = 3.0, py::arg("gamma") = 0.8,
      py::call_guard<py::gil_scoped_release>());

  m.def("verify", &verify_rows, py::arg("rows"), py::arg("notation"));

  m.def("tuple_count",
        [](const std::string& notation) {
          return build_store(config_from(notation)).remaining();
        },
        py::arg("notation"));

  m.def("size_lower_bound",
        [](const std::string& notation) {
          return size_lower_bound(config_from(notation));
        },
        py::arg("notation"));

  m.def("wilcoxon_rank_sum",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          const RankSumResult r = wilcoxon_rank_sum(a, b);
          return py::make_tuple(r.statistic, r.p_value);
        },
        py::arg("a"), py::arg("b"));

  m.def("bonferroni_holm",
        [](const std::vector<std::pair<std::string, double>>& p_values,
           double alpha) {
          py::list out;
          for (const HolmDecision& d : bonferroni_holm(p_values, alpha)) {
            out.append(py::make_tuple(d.label, d.p_value, d.threshold,
                                      d.reject));
          }
          return out;
        },
        py::arg("p_values"), py::arg("alpha") = 0.05);

  m.def("builtin_suite_names", [] {
    std::vector<std::string> names;
    for (const BenchmarkSpec& spec : builtin_suites()) {
      names.push_back(spec.name);
    }
    return names;
  });

  m.def("reference_values",
        [](const std::string& name) {
          py::dict out;
          for (const BenchmarkSpec& spec : builtin_suites()) {
            if (spec.name != name) continue;
            for (const auto& [strategy, entry] : spec.reference_values) {
              out[strategy.c_str()] = py::make_tuple(entry.best, entry.mean);
            }
            return out;
          }
          throw std::invalid_argument("unknown benchmark: " + name);
        },
        py::arg("name"));
}
