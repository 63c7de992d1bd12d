// Python bindings. Predecessor arrays cross the boundary as lists of ints and
// parent distributions as (n, n) float64 arrays.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multisol/algorithms.hpp"
#include "multisol/distribution.hpp"
#include "multisol/evaluation.hpp"
#include "multisol/io.hpp"
#include "multisol/rerun_study.hpp"
#include "multisol/samplers.hpp"
#include "multisol/validity.hpp"

namespace py = pybind11;
using namespace multisol;

namespace {

using Parents = std::vector<Vertex>;

PredecessorArray to_pa(const Parents& p) { return PredecessorArray(p); }
Parents from_pa(const PredecessorArray& pi) { return pi.parents(); }

std::vector<Parents> from_pas(const std::vector<PredecessorArray>& v) {
  std::vector<Parents> out;
  out.reserve(v.size());
  for (const auto& pi : v) out.push_back(pi.parents());
  return out;
}

py::array_t<double> matrix(const ParentDistribution& d) {
  const auto n = static_cast<py::ssize_t>(d.n());
  py::array_t<double> a({n, n});
  std::copy(d.values().begin(), d.values().end(), a.mutable_data());
  return a;
}

ParentDistribution from_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1))
    throw std::invalid_argument("distribution must be a square matrix");
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ParentDistribution(n, std::vector<double>(a.data(), a.data() + n * n));
}

SamplerConfig sampler_config(Method m, std::size_t beam_width, std::size_t beam_branch,
                             std::size_t greedy_samples, std::size_t greedy_resamples) {
  SamplerConfig c;
  c.method = m;
  c.beam_width = beam_width;
  c.beam_branch = beam_branch;
  c.greedy_parent_samples = greedy_samples;
  c.greedy_max_resamples = greedy_resamples;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiple-solution extraction for randomised DFS and Bellman-Ford";
  m.attr("__version__") = MULTISOL_VERSION;

  py::enum_<Task>(m, "Task").value("DFS", Task::Dfs).value("BELLMAN_FORD", Task::BellmanFord);
  py::enum_<TiebreakMode>(m, "TiebreakMode")
      .value("PER_RUN_GLOBAL_SHUFFLE", TiebreakMode::PerRunGlobalShuffle)
      .value("PER_NODE_SHUFFLE", TiebreakMode::PerNodeShuffle);
  py::enum_<Method>(m, "Method")
      .value("ARGMAX", Method::Argmax)
      .value("UPWARDS", Method::Upwards)
      .value("ALT_UPWARDS", Method::AltUpwards)
      .value("BEAM", Method::Beam)
      .value("GREEDY", Method::Greedy)
      .value("RANDOM", Method::Random);
  py::enum_<DistKind>(m, "DistKind").value("EMPIRICAL", DistKind::Empirical).value("PERTURBED", DistKind::Perturbed);
  py::enum_<ReuseDenominator>(m, "ReuseDenominator")
      .value("UNION", ReuseDenominator::Union)
      .value("FIRST", ReuseDenominator::First);

  m.def("parse_method", &parse_method, py::arg("name"));
  m.def("method_name", [](Method x) { return to_string(x); }, py::arg("method"));
  m.def("display_name", &display_name, py::arg("method"));
  m.def("methods_for", &methods_for, py::arg("task"));
  m.def("sampler_methods", &sampler_methods, py::arg("task"));

  // graph_core
  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, bool, std::int64_t>(), py::arg("n"), py::arg("directed"),
           py::arg("scale") = 1)
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("scale", &Graph::scale)
      .def_property("source", [](const Graph& g) { return g.source(); }, &Graph::set_source)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"), py::arg("units"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("weight_units", &Graph::weight_units, py::arg("u"), py::arg("v"))
      .def("weight", &Graph::weight, py::arg("u"), py::arg("v"))
      .def("out_neighbors", &Graph::out_neighbors, py::arg("u"))
      .def("in_neighbors", &Graph::in_neighbors, py::arg("v"))
      .def("edge_count", &Graph::edge_count)
      .def("validate", &Graph::validate)
      .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); },
                  py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + (g.directed() ? " directed" : " undirected") +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "generate_graph",
      [](std::size_t n, double p, Task task, std::vector<std::int64_t> weights, bool normalize,
         std::uint64_t seed, std::optional<bool> directed, std::optional<bool> weighted) {
        GraphSpec s;
        s.n = n;
        s.edge_probability = p;
        s.task = task;
        s.weight_set = std::move(weights);
        s.normalize = normalize;
        s.seed = seed;
        s.directed = directed;
        s.weighted = weighted;
        return generate_graph(s);
      },
      py::arg("n"), py::arg("edge_probability") = 0.5, py::arg("task") = Task::BellmanFord,
      py::arg("weight_set") = std::vector<std::int64_t>{1, 2, 3}, py::arg("normalize") = true,
      py::arg("seed") = 0, py::arg("directed") = py::none(), py::arg("weighted") = py::none());
  m.def("reachable", &reachable, py::arg("graph"), py::arg("s"), py::arg("t"));
  m.def("tree_edges", [](const Parents& p) { return tree_edges(to_pa(p)); }, py::arg("pi"));
  m.def(
      "path_cost_from_source",
      [](const Graph& g, const Parents& p, Vertex v) { return path_cost_from_source(g, to_pa(p), v); },
      py::arg("graph"), py::arg("pi"), py::arg("v"));
  m.attr("UNREACHABLE") = kUnreachable;

  // reference_algorithms
  m.def(
      "randomized_dfs",
      [](const Graph& g, std::uint64_t seed, TiebreakMode mode) {
        return from_pa(randomized_dfs(g, TiebreakPolicy{mode, seed}));
      },
      py::arg("graph"), py::arg("seed"), py::arg("mode") = TiebreakMode::PerRunGlobalShuffle);
  m.def(
      "randomized_bellman_ford",
      [](const Graph& g, std::uint64_t seed) {
        return from_pa(randomized_bellman_ford(g, TiebreakPolicy{TiebreakMode::PerRunGlobalShuffle, seed}));
      },
      py::arg("graph"), py::arg("seed"));
  m.def("bellman_ford_costs", &deterministic_bellman_ford_costs, py::arg("graph"),
        "Exact costs in weight units (divide by graph.scale); UNREACHABLE where no path exists.");
  m.def(
      "enumerate_dfs_trees",
      [](const Graph& g, TiebreakMode mode, std::size_t limit) {
        std::vector<std::pair<Parents, double>> out;
        for (const auto& w : enumerate_dfs_trees(g, mode, limit)) out.emplace_back(w.tree.parents(), w.frequency);
        return out;
      },
      py::arg("graph"), py::arg("mode") = TiebreakMode::PerRunGlobalShuffle,
      py::arg("limit") = kDefaultEnumerationLimit);
  m.def(
      "enumerate_shortest_path_trees",
      [](const Graph& g, std::size_t limit) { return from_pas(enumerate_shortest_path_trees(g, limit)); },
      py::arg("graph"), py::arg("limit") = kDefaultEnumerationLimit);

  // distributions
  m.def(
      "run_reference",
      [](const Graph& g, Task t, std::uint64_t seed, TiebreakMode mode) {
        return from_pa(run_reference(g, t, seed, mode));
      },
      py::arg("graph"), py::arg("task"), py::arg("seed"), py::arg("mode") = TiebreakMode::PerRunGlobalShuffle);
  m.def(
      "build_empirical",
      [](const Graph& g, Task t, std::size_t runs, std::uint64_t seed, TiebreakMode mode) {
        return matrix(build_empirical(g, t, runs, seed, mode));
      },
      py::arg("graph"), py::arg("task"), py::arg("runs") = kDefaultRuns, py::arg("seed") = 0,
      py::arg("mode") = TiebreakMode::PerRunGlobalShuffle);
  m.def(
      "kl_divergence",
      [](const py::array_t<double>& p, const py::array_t<double>& q, double eps) {
        return kl_divergence(from_matrix(p), from_matrix(q), eps);
      },
      py::arg("p"), py::arg("q"), py::arg("epsilon") = kKlSmoothing);
  m.def(
      "perturb",
      [](const py::array_t<double>& p, double alpha, std::uint64_t seed) {
        return matrix(perturb(from_matrix(p), alpha, seed));
      },
      py::arg("p"), py::arg("alpha"), py::arg("seed"));

  // samplers
  m.def(
      "extract",
      [](const py::array_t<double>& p, const Graph& g, Method method, std::uint64_t seed,
         std::size_t beam_width, std::size_t beam_branch, std::size_t greedy_samples,
         std::size_t greedy_resamples) {
        const auto cfg = sampler_config(method, beam_width, beam_branch, greedy_samples, greedy_resamples);
        Rng rng(seed);
        return from_pa(extract(from_matrix(p), g, cfg, rng));
      },
      py::arg("p"), py::arg("graph"), py::arg("method"), py::arg("seed") = 0, py::arg("beam_width") = 3,
      py::arg("beam_branch") = 3, py::arg("greedy_samples") = 5, py::arg("greedy_resamples") = 10,
      "One predecessor array drawn from p with the given method.");
  m.def(
      "extract_many",
      [](const py::array_t<double>& p, const Graph& g, Method method, std::size_t k, std::uint64_t seed) {
        const auto d = from_matrix(p);
        SamplerConfig cfg;
        cfg.method = method;
        Rng rng(seed);
        std::vector<Parents> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(extract(d, g, cfg, rng).parents());
        return out;
      },
      py::arg("p"), py::arg("graph"), py::arg("method"), py::arg("k"), py::arg("seed") = 0,
      "k draws from one generator, default sampler settings.");

  // validity
  m.def(
      "check_dfs_valid",
      [](const Graph& g, const Parents& p) {
        const auto v = check_dfs_valid(g, to_pa(p));
        std::vector<std::string> failed;
        for (auto c : v.failed_conditions) failed.push_back(to_string(c));
        return std::make_pair(v.valid, failed);
      },
      py::arg("graph"), py::arg("pi"), "(valid, failed condition names)");
  m.def("check_bf_valid", [](const Graph& g, const Parents& p) { return check_bf_valid(g, to_pa(p)); },
        py::arg("graph"), py::arg("pi"));
  m.def("diagnose_bf", [](const Graph& g, const Parents& p) { return to_string(diagnose_bf(g, to_pa(p))); },
        py::arg("graph"), py::arg("pi"));
  m.def("is_valid", [](Task t, const Graph& g, const Parents& p) { return is_valid(t, g, to_pa(p)); },
        py::arg("task"), py::arg("graph"), py::arg("pi"));

  // evaluation
  py::class_<StudyTable>(m, "StudyTable")
      .def_readonly("columns", &StudyTable::columns)
      .def_readonly("rows", &StudyTable::rows)
      .def("number", &StudyTable::number, py::arg("row"), py::arg("column"))
      .def("to_csv", &StudyTable::to_csv);

  py::class_<MetricsRecord>(m, "MetricsRecord")
      .def_readonly("method", &MetricsRecord::method)
      .def_readonly("uniques_mean", &MetricsRecord::uniques_mean)
      .def_readonly("uniques_std", &MetricsRecord::uniques_std)
      .def_readonly("valids_mean", &MetricsRecord::valids_mean)
      .def_readonly("valids_std", &MetricsRecord::valids_std)
      .def_readonly("accuracy_mean", &MetricsRecord::accuracy_mean)
      .def_readonly("accuracy_std", &MetricsRecord::accuracy_std);

  py::class_<EvalConfig>(m, "EvalConfig")
      .def(py::init<>())
      .def_readwrite("task", &EvalConfig::task)
      .def_property(
          "method", [](const EvalConfig& c) { return c.sampler.method; },
          [](EvalConfig& c, Method x) { c.sampler.method = x; })
      .def_property(
          "n", [](const EvalConfig& c) { return c.graph_spec.n; },
          [](EvalConfig& c, std::size_t n) { c.graph_spec.n = n; })
      .def_property(
          "edge_probability", [](const EvalConfig& c) { return c.graph_spec.edge_probability; },
          [](EvalConfig& c, double p) { c.graph_spec.edge_probability = p; })
      .def_readwrite("graph_count", &EvalConfig::graph_count)
      .def_readwrite("samples_per_graph", &EvalConfig::samples_per_graph)
      .def_readwrite("runs", &EvalConfig::runs)
      .def_property(
          "perturb_alpha",
          [](const EvalConfig& c) -> std::optional<double> {
            if (c.distribution.kind == DistKind::Empirical) return std::nullopt;
            return c.distribution.alpha;
          },
          [](EvalConfig& c, std::optional<double> a) {
            c.distribution.kind = a ? DistKind::Perturbed : DistKind::Empirical;
            c.distribution.alpha = a.value_or(0.0);
          },
          "None for the empirical distribution, else the perturbation strength.")
      .def_property(
          "dist_runs", [](const EvalConfig& c) { return c.distribution.runs; },
          [](EvalConfig& c, std::size_t r) { c.distribution.runs = r; })
      .def_readwrite("seed", &EvalConfig::seed)
      .def_readwrite("jobs", &EvalConfig::jobs)
      .def_readwrite("fixed_graphs", &EvalConfig::fixed_graphs);

  m.def("accuracy_suite", &accuracy_suite, py::arg("config"));
  m.def(
      "coverage_study",
      [](const EvalConfig& cfg, const std::vector<Method>& methods) { return coverage_study(cfg, methods); },
      py::arg("config"), py::arg("methods"));
  m.def(
      "edge_reuse_evolution",
      [](const EvalConfig& cfg, const std::vector<Method>& methods, ReuseDenominator d) {
        return edge_reuse_evolution(cfg, methods, d);
      },
      py::arg("config"), py::arg("methods"), py::arg("denominator") = ReuseDenominator::Union);
  m.def(
      "mean_edge_reuse",
      [](const std::vector<Parents>& samples, ReuseDenominator d) {
        std::vector<PredecessorArray> v;
        for (const auto& p : samples) v.push_back(to_pa(p));
        return mean_edge_reuse(v, d);
      },
      py::arg("samples"), py::arg("denominator") = ReuseDenominator::Union);
  m.def(
      "rerun_divergence_study",
      [](std::vector<std::size_t> sizes, std::size_t graphs_per_size, std::vector<std::size_t> counts,
         Task task, double p, std::uint64_t seed, std::size_t jobs) {
        RerunStudyConfig c;
        c.sizes = std::move(sizes);
        c.graphs_per_size = graphs_per_size;
        c.rerun_counts = std::move(counts);
        c.task = task;
        c.edge_probability = p;
        c.seed = seed;
        c.jobs = jobs;
        return rerun_divergence_study(c);
      },
      py::arg("sizes") = RerunStudyConfig::default_sizes(), py::arg("graphs_per_size") = 100,
      py::arg("rerun_counts") = std::vector<std::size_t>{20, 50, 100}, py::arg("task") = Task::BellmanFord,
      py::arg("edge_probability") = 0.5, py::arg("seed") = 0, py::arg("jobs") = 1);
}
