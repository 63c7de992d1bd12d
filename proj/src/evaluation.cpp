#include "multisol/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "multisol/parallel.hpp"
#include "multisol/random.hpp"
#include "multisol/validity.hpp"

namespace multisol {

namespace {

// Seed-derivation tags; one per independent stream.
enum SeedTag : std::uint64_t {
  kGraphTag = 1,
  kDistTag,
  kPerturbTag,
  kAccuracyTag,
  kUniquesTag,
  kCoverageTag,
  kReferenceTag,
};

std::size_t graph_count(const EvalConfig& cfg) {
  return cfg.fixed_graphs.empty() ? cfg.graph_count : cfg.fixed_graphs.size();
}

std::size_t graph_size(const EvalConfig& cfg) {
  return cfg.fixed_graphs.empty() ? cfg.graph_spec.n : cfg.fixed_graphs.front().n();
}

Graph make_graph(const EvalConfig& cfg, std::size_t run, std::size_t index) {
  if (!cfg.fixed_graphs.empty()) return cfg.fixed_graphs[index];
  GraphSpec spec = cfg.graph_spec;
  spec.task = cfg.task;
  spec.seed = derive_seed(cfg.seed, {kGraphTag, run, index});
  return generate_graph(spec);
}

ParentDistribution make_distribution(const EvalConfig& cfg, const Graph& g, std::size_t run,
                                     std::size_t index) {
  if (!cfg.fixed_distributions.empty()) return cfg.fixed_distributions[index];
  ParentDistribution dist = build_empirical(g, cfg.task, cfg.distribution.runs,
                                            derive_seed(cfg.seed, {kDistTag, run, index}),
                                            cfg.distribution.mode);
  if (cfg.distribution.kind == DistKind::Perturbed) {
    dist = perturb(dist, cfg.distribution.alpha, derive_seed(cfg.seed, {kPerturbTag, run, index}));
  }
  return dist;
}

}  // namespace

std::string DistributionSpec::label() const {
  if (kind == DistKind::Empirical) return "empirical";
  char buf[48];
  std::snprintf(buf, sizeof buf, "perturbed:%.4g", alpha);
  return buf;
}

void DistributionSpec::validate() const {
  if (runs == 0) throw std::invalid_argument("distribution runs must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

void EvalConfig::validate() const {
  if (graph_count == 0 && fixed_graphs.empty()) throw std::invalid_argument("graph count must be positive");
  if (samples_per_graph == 0) throw std::invalid_argument("samples per graph must be positive");
  if (runs == 0) throw std::invalid_argument("evaluation runs must be positive");
  if (!fixed_distributions.empty() && fixed_distributions.size() != fixed_graphs.size()) {
    throw std::invalid_argument("distributions are not aligned with graphs");
  }
  for (std::size_t i = 0; i < fixed_distributions.size(); ++i) {
    if (fixed_distributions[i].n() != fixed_graphs[i].n()) {
      throw std::invalid_argument("distribution " + std::to_string(i) + " does not match its graph");
    }
  }
  if (fixed_graphs.empty()) graph_spec.validate();
  sampler.validate();
  distribution.validate();
}

UniquesValids uniques_and_valids(const ParentDistribution& dist, const Graph& g, Task task,
                                 const SamplerConfig& sampler, std::size_t k, Rng& rng) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::set<PredecessorArray> distinct;
  UniquesValids out;
  for (std::size_t i = 0; i < k; ++i) {
    PredecessorArray pi = extract(dist, g, sampler, rng);
    if (is_valid(task, g, pi)) ++out.valids;
    distinct.insert(std::move(pi));
  }
  out.uniques = distinct.size();
  return out;
}

MetricsRecord accuracy_suite(const EvalConfig& cfg) {
  cfg.validate();
  const std::size_t count = graph_count(cfg);
  std::vector<double> accuracy, uniques, valids;
  for (std::size_t run = 0; run < cfg.runs; ++run) {
    std::vector<std::uint8_t> correct(count, 0);
    std::vector<UniquesValids> per_graph(count);
    parallel_for(count, cfg.jobs, [&](std::size_t i) {
      const Graph g = make_graph(cfg, run, i);
      const ParentDistribution dist = make_distribution(cfg, g, run, i);
      Rng single(derive_seed(cfg.seed, {kAccuracyTag, run, i}));
      correct[i] = is_valid(cfg.task, g, extract(dist, g, cfg.sampler, single)) ? 1 : 0;
      Rng batch(derive_seed(cfg.seed, {kUniquesTag, run, i}));
      per_graph[i] =
          uniques_and_valids(dist, g, cfg.task, cfg.sampler, cfg.samples_per_graph, batch);
    });
    double hits = 0.0, u = 0.0, v = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      hits += correct[i];
      u += static_cast<double>(per_graph[i].uniques);
      v += static_cast<double>(per_graph[i].valids);
    }
    const auto denom = static_cast<double>(count);
    accuracy.push_back(hits / denom);
    uniques.push_back(u / denom);
    valids.push_back(v / denom);
  }
  MetricsRecord record;
  record.method = display_name(cfg.sampler.method);
  const MeanStd a = mean_std(accuracy), u = mean_std(uniques), v = mean_std(valids);
  record.accuracy_mean = a.mean;
  record.accuracy_std = a.std;
  record.uniques_mean = u.mean;
  record.uniques_std = u.std;
  record.valids_mean = v.mean;
  record.valids_std = v.std;
  return record;
}

double mean_edge_reuse(std::span<const PredecessorArray> samples, ReuseDenominator denominator) {
  if (samples.size() < 2) throw std::invalid_argument("edge reuse needs at least two samples");
  std::vector<std::vector<TreeEdge>> edges;
  edges.reserve(samples.size());
  for (const auto& pi : samples) edges.push_back(tree_edges(pi));

  double total = 0.0;
  std::size_t pairs = 0;
  std::vector<TreeEdge> common;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b, ++pairs) {
      common.clear();
      std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                            std::back_inserter(common));
      const std::size_t base = denominator == ReuseDenominator::Union
                                   ? edges[a].size() + edges[b].size() - common.size()
                                   : edges[a].size();
      total += base == 0 ? 1.0 : static_cast<double>(common.size()) / static_cast<double>(base);
    }
  }
  return total / static_cast<double>(pairs);
}

SampleCollection collect_samples(const EvalConfig& cfg, std::span<const Method> methods) {
  cfg.validate();
  const std::size_t count = graph_count(cfg);
  const std::size_t s_max = cfg.samples_per_graph;

  SampleCollection out;
  for (Method m : methods) out.series.push_back(display_name(m));
  out.series.emplace_back(kReferenceSeries);
  out.graphs.resize(count);
  out.samples.assign(out.series.size(), std::vector<std::vector<PredecessorArray>>(count));

  parallel_for(count, cfg.jobs, [&](std::size_t i) {
    Graph g = make_graph(cfg, 0, i);
    const ParentDistribution dist = make_distribution(cfg, g, 0, i);
    for (std::size_t k = 0; k < methods.size(); ++k) {
      SamplerConfig sampler = cfg.sampler;
      sampler.method = methods[k];
      Rng rng(derive_seed(cfg.seed, {kCoverageTag, i, static_cast<std::uint64_t>(methods[k])}));
      auto& list = out.samples[k][i];
      for (std::size_t s = 0; s < s_max; ++s) list.push_back(extract(dist, g, sampler, rng));
    }
    auto& reference = out.samples[methods.size()][i];
    for (std::size_t s = 0; s < s_max; ++s) {
      reference.push_back(run_reference(g, cfg.task, derive_seed(cfg.seed, {kReferenceTag, i, s}),
                                        cfg.distribution.mode));
    }
    out.graphs[i] = std::move(g);
  });
  return out;
}

StudyTable coverage_table(const EvalConfig& cfg, const SampleCollection& collection) {
  StudyTable table{{"method", "n", "dist", "sample_index", "unique_valid_mean"}, {}};
  const std::size_t count = collection.graphs.size();
  for (std::size_t k = 0; k < collection.series.size(); ++k) {
    std::vector<double> sum(cfg.samples_per_graph, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
      std::set<PredecessorArray> found;
      const auto& list = collection.samples[k][i];
      for (std::size_t s = 0; s < list.size(); ++s) {
        if (is_valid(cfg.task, collection.graphs[i], list[s])) found.insert(list[s]);
        sum[s] += static_cast<double>(found.size());
      }
    }
    for (std::size_t s = 0; s < sum.size(); ++s) {
      table.add_row({collection.series[k], std::to_string(graph_size(cfg)),
                     cfg.distribution.label(), std::to_string(s + 1),
                     format_number(sum[s] / static_cast<double>(count))});
    }
  }
  return table;
}

StudyTable coverage_study(const EvalConfig& cfg, std::span<const Method> methods) {
  return coverage_table(cfg, collect_samples(cfg, methods));
}

StudyTable edge_reuse_table(const EvalConfig& cfg, const SampleCollection& collection,
                            ReuseDenominator denominator) {
  if (cfg.samples_per_graph < 2) {
    throw std::invalid_argument("edge reuse evolution needs at least two samples per graph");
  }
  StudyTable table{{"method", "n", "dist", "sample_index", "mean_edge_reuse"}, {}};
  const std::size_t count = collection.graphs.size();
  for (std::size_t k = 0; k < collection.series.size(); ++k) {
    for (std::size_t s = 2; s <= cfg.samples_per_graph; ++s) {
      double sum = 0.0;
      for (std::size_t i = 0; i < count; ++i) {
        const auto& list = collection.samples[k][i];
        sum += mean_edge_reuse(std::span<const PredecessorArray>(list.data(), s), denominator);
      }
      table.add_row({collection.series[k], std::to_string(graph_size(cfg)),
                     cfg.distribution.label(), std::to_string(s),
                     format_number(sum / static_cast<double>(count))});
    }
  }
  return table;
}

StudyTable edge_reuse_evolution(const EvalConfig& cfg, std::span<const Method> methods,
                                ReuseDenominator denominator) {
  if (cfg.samples_per_graph < 2) {
    throw std::invalid_argument("edge reuse evolution needs at least two samples per graph");
  }
  return edge_reuse_table(cfg, collect_samples(cfg, methods), denominator);
}

StudyTable table1(const EvalConfig& cfg, std::span<const MetricsRecord> records) {
  StudyTable table{
      {"method", "n", "dist", "uniques_mean", "uniques_std", "valids_mean", "valids_std"}, {}};
  for (const auto& r : records) {
    table.add_row({r.method, std::to_string(graph_size(cfg)), cfg.distribution.label(),
                   format_number(r.uniques_mean), format_number(r.uniques_std),
                   format_number(r.valids_mean), format_number(r.valids_std)});
  }
  return table;
}

StudyTable table2(const EvalConfig& cfg, std::span<const MetricsRecord> records) {
  StudyTable table{{"method", "n", "dist", "acc_mean", "acc_std"}, {}};
  for (const auto& r : records) {
    table.add_row({r.method, std::to_string(graph_size(cfg)), cfg.distribution.label(),
                   format_number(r.accuracy_mean), format_number(r.accuracy_std)});
  }
  return table;
}

std::vector<Method> methods_for(Task task) {
  if (task == Task::BellmanFord) return {Method::Argmax, Method::Beam, Method::Greedy, Method::Random};
  return {Method::Argmax, Method::AltUpwards, Method::Upwards, Method::Random};
}

std::vector<Method> sampler_methods(Task task) {
  if (task == Task::BellmanFord) return {Method::Beam, Method::Greedy};
  return {Method::AltUpwards, Method::Upwards};
}

}  // namespace multisol
