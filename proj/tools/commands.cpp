#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "multisol/distribution.hpp"
#include "multisol/evaluation.hpp"
#include "multisol/io.hpp"
#include "multisol/parallel.hpp"
#include "multisol/random.hpp"
#include "multisol/rerun_study.hpp"
#include "multisol/samplers.hpp"
#include "multisol/validity.hpp"

namespace multisol::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve_output(const std::string& output) {
  if (output.empty()) throw UsageError("an output path (-o) is required");
  fs::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("MULTISOL_OUT_DIR"); dir && *dir) return fs::path(dir) / path;
  }
  return path;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const fs::path& output, const std::string& command, const json& config,
                    std::uint64_t seed, json extra = json::object()) {
  json manifest{{"command", command},
                {"config", config},
                {"seed", seed},
                {"tool_version", MULTISOL_VERSION},
                {"timestamp", utc_timestamp()}};
  for (auto& [key, value] : extra.items()) manifest[key] = value;
  write_json_file(output.string() + ".manifest.json", manifest);
}

Task resolve_task(const std::string& name, const std::vector<Graph>& graphs) {
  if (!name.empty()) return parse_task(name);
  return !graphs.empty() && graphs.front().source() ? Task::BellmanFord : Task::Dfs;
}

TiebreakMode parse_tiebreak(const std::string& name) {
  if (name == "global") return TiebreakMode::PerRunGlobalShuffle;
  if (name == "per-node") return TiebreakMode::PerNodeShuffle;
  throw std::invalid_argument("unknown tiebreak mode '" + name + "' (expected global|per-node)");
}

SamplerConfig make_sampler(const SamplerOptions& o, Method method) {
  SamplerConfig cfg;
  cfg.method = method;
  cfg.beam_width = o.beam_width;
  cfg.beam_branch = o.beam_branch;
  cfg.greedy_parent_samples = o.greedy_samples;
  cfg.greedy_max_resamples = o.greedy_resamples;
  cfg.validate();
  return cfg;
}

}  // namespace

int run_gen(const GenOptions& o) {
  const fs::path output = resolve_output(o.output);
  if (o.count == 0) throw std::invalid_argument("--count must be at least 1");
  GraphSpec spec;
  spec.n = o.n;
  spec.edge_probability = o.p;
  spec.task = parse_task(o.task);
  spec.weight_set = o.weights;
  spec.normalize = o.normalize;
  spec.validate();

  json graphs = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    spec.seed = derive_seed(o.seed, {i});
    graphs.push_back(graph_to_json(generate_graph(spec)));
  }
  write_json_file(output, graphs);
  write_manifest(output, "gen", o, o.seed);
  return kOk;
}

int run_dist(const DistOptions& o) {
  const fs::path output = resolve_output(o.output);
  if (o.runs == 0) throw std::invalid_argument("--runs must be at least 1");
  const bool perturbed = o.perturb >= 0.0;
  if (perturbed && o.perturb > 1.0) throw std::invalid_argument("--perturb must lie in [0, 1]");
  const TiebreakMode mode = parse_tiebreak(o.tiebreak);
  const std::vector<Graph> graphs = read_graphs(o.input);
  const Task task = resolve_task(o.task, graphs);

  std::vector<json> out(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    ParentDistribution d = build_empirical(graphs[i], task, o.runs, derive_seed(o.seed, {i}), mode);
    if (perturbed) d = perturb(d, o.perturb, derive_seed(o.seed, {i, 1}));
    out[i] = distribution_to_json(d);
  });
  write_json_file(output, json(out));
  json extra{{"perturbed", perturbed}};
  if (perturbed) extra["alpha"] = o.perturb;
  write_manifest(output, "dist", o, o.seed, extra);
  return kOk;
}

int run_sample(const SampleOptions& o) {
  const fs::path output = resolve_output(o.output);
  if (o.k == 0) throw std::invalid_argument("--k must be at least 1");
  const std::vector<Graph> graphs = read_graphs(o.graphs);
  const std::vector<ParentDistribution> dists = read_distributions(o.dists);
  if (graphs.size() != dists.size()) {
    throw std::invalid_argument("graph file has " + std::to_string(graphs.size()) +
                                " entries but distribution file has " +
                                std::to_string(dists.size()));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].n() != dists[i].n()) {
      throw std::invalid_argument("graph " + std::to_string(i) + " and its distribution differ in size");
    }
  }
  const Task task = resolve_task(o.task, graphs);
  const SamplerConfig sampler = make_sampler(o.sampler, parse_method(o.method));

  std::vector<json> out(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    Rng rng(derive_seed(o.seed, {i}));
    json solutions = json::array();
    for (std::size_t s = 0; s < o.k; ++s) {
      const PredecessorArray pi = extract(dists[i], graphs[i], sampler, rng);
      solutions.push_back({{"pi", tree_to_json(pi)},
                           {"valid", is_valid(task, graphs[i], pi)},
                           {"failed", failure_tags(task, graphs[i], pi)}});
    }
    out[i] = json{{"graph", i}, {"method", o.method}, {"solutions", std::move(solutions)}};
  });
  write_json_file(output, json(out));
  write_manifest(output, "sample", o, o.seed);
  return kOk;
}

int run_check(const CheckOptions& o) {
  const std::vector<Graph> graphs = read_graphs(o.graphs);
  const json input = read_json_file(o.solutions);
  if (!input.is_array()) throw std::invalid_argument("solutions file must hold an array");
  const Task task = resolve_task(o.task, graphs);

  // (graph index, candidate) in file order.
  std::vector<std::pair<std::size_t, PredecessorArray>> items;
  for (const auto& entry : input) {
    if (entry.is_object()) {
      const auto gi = entry.at("graph").get<std::size_t>();
      for (const auto& s : entry.at("solutions")) {
        items.emplace_back(gi, tree_from_json(s.is_object() ? s.at("pi") : s));
      }
    } else {
      items.emplace_back(o.graph_index, tree_from_json(entry));
    }
  }

  std::ostringstream lines;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const auto& [gi, pi] = items[idx];
    if (gi >= graphs.size()) throw std::invalid_argument("solution refers to missing graph " + std::to_string(gi));
    const bool valid = is_valid(task, graphs[gi], pi);
    lines << idx << ',' << (valid ? "true" : "false") << ','
          << (valid ? "" : failure_tags(task, graphs[gi], pi)) << '\n';
  }
  if (o.output.empty()) {
    std::cout << lines.str();
  } else {
    write_text_file(resolve_output(o.output), lines.str());
  }
  return kOk;
}

void resolve_defaults(StudyOptions& o) {
  const bool table = o.kind == "table1" || o.kind == "table2";
  if (o.graphs == 0) o.graphs = table ? 50 : 10;
  if (o.samples == 0) o.samples = table ? 5 : 25;
  if (o.methods.empty() && o.kind != "reruns") {
    const Task task = parse_task(o.task);
    for (Method m : table ? methods_for(task) : sampler_methods(task)) {
      o.methods.push_back(to_string(m));
    }
  }
  if (o.sizes.empty()) o.sizes = RerunStudyConfig::default_sizes();
  if (!o.graph_file.empty() || !o.dist_file.empty()) o.end_to_end = false;
}

int run_study(StudyOptions o) {
  resolve_defaults(o);
  const fs::path output = resolve_output(o.output);
  const Task task = parse_task(o.task);

  StudyTable table;
  if (o.kind == "reruns") {
    RerunStudyConfig cfg;
    cfg.sizes = o.sizes;
    cfg.graphs_per_size = o.graphs_per_size;
    cfg.rerun_counts = o.counts;
    cfg.task = task;
    cfg.edge_probability = o.p;
    cfg.seed = o.seed;
    cfg.jobs = o.jobs;
    table = rerun_divergence_study(cfg);
  } else {
    EvalConfig cfg;
    cfg.task = task;
    cfg.sampler = make_sampler(o.sampler, Method::Argmax);
    cfg.graph_spec.n = o.n;
    cfg.graph_spec.edge_probability = o.p;
    cfg.graph_spec.task = task;
    cfg.graph_spec.weight_set = o.weights;
    cfg.graph_spec.normalize = o.normalize;
    cfg.graph_count = o.graphs;
    cfg.samples_per_graph = o.samples;
    cfg.runs = o.runs;
    if (o.dist == "empirical") {
      cfg.distribution.kind = DistKind::Empirical;
    } else if (o.dist == "perturbed") {
      cfg.distribution.kind = DistKind::Perturbed;
      cfg.distribution.alpha = o.alpha;
    } else {
      throw std::invalid_argument("unknown --dist '" + o.dist + "' (expected empirical|perturbed)");
    }
    cfg.distribution.runs = o.dist_runs;
    cfg.distribution.mode = parse_tiebreak(o.tiebreak);
    cfg.seed = o.seed;
    cfg.jobs = o.jobs;
    if (!o.graph_file.empty()) cfg.fixed_graphs = read_graphs(o.graph_file);
    if (!o.dist_file.empty()) {
      if (o.graph_file.empty()) throw std::invalid_argument("--dist-file needs --graph-file");
      cfg.fixed_distributions = read_distributions(o.dist_file);
    }

    std::vector<Method> methods;
    for (const auto& name : o.methods) methods.push_back(parse_method(name));

    if (o.kind == "table1" || o.kind == "table2") {
      std::vector<MetricsRecord> records;
      for (Method m : methods) {
        cfg.sampler.method = m;
        records.push_back(accuracy_suite(cfg));
      }
      table = o.kind == "table1" ? table1(cfg, records) : table2(cfg, records);
    } else if (o.kind == "coverage") {
      table = coverage_study(cfg, methods);
    } else if (o.kind == "edge-reuse") {
      ReuseDenominator denominator;
      if (o.reuse_denominator == "union") {
        denominator = ReuseDenominator::Union;
      } else if (o.reuse_denominator == "first") {
        denominator = ReuseDenominator::First;
      } else {
        throw std::invalid_argument("unknown --reuse-denominator '" + o.reuse_denominator + "'");
      }
      table = edge_reuse_evolution(cfg, methods, denominator);
    } else {
      throw std::invalid_argument("unknown study '" + o.kind + "'");
    }
  }

  write_text_file(output, table.to_csv());
  write_manifest(output, "study " + o.kind, o, o.seed);
  return kOk;
}

int run_replay(const std::string& manifest_path, const std::string& output_override,
               std::size_t jobs_override) {
  const json manifest = read_json_file(manifest_path);
  const std::string command = manifest.at("command").get<std::string>();
  json config = manifest.at("config");
  if (!output_override.empty()) config["output"] = output_override;
  if (jobs_override != 0 && config.contains("jobs")) config["jobs"] = jobs_override;

  if (command == "gen") return run_gen(config.get<GenOptions>());
  if (command == "dist") return run_dist(config.get<DistOptions>());
  if (command == "sample") return run_sample(config.get<SampleOptions>());
  if (command.rfind("study ", 0) == 0) return run_study(config.get<StudyOptions>());
  throw std::invalid_argument("manifest names unknown command '" + command + "'");
}

}  // namespace multisol::cli
