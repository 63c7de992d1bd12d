#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multisol/algorithms.hpp"
#include "multisol/distribution.hpp"
#include "multisol/graph.hpp"
#include "multisol/samplers.hpp"
#include "multisol/study_table.hpp"

namespace multisol {

enum class DistKind { Empirical, Perturbed };

/// Which distribution the samplers read: the empirical one, or the empirical
/// one pushed towards noise by `alpha`.
struct DistributionSpec {
  DistKind kind = DistKind::Empirical;
  double alpha = 0.0;
  std::size_t runs = kDefaultRuns;
  TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle;

  /// "empirical" or "perturbed:<alpha>".
  std::string label() const;
  void validate() const;
};

struct EvalConfig {
  Task task = Task::BellmanFord;
  SamplerConfig sampler;
  GraphSpec graph_spec;
  std::size_t graph_count = 50;
  std::size_t samples_per_graph = 5;
  std::size_t runs = 5;
  DistributionSpec distribution;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// When non-empty these graphs are used in every run instead of fresh ones.
  std::vector<Graph> fixed_graphs;
  /// Optional distributions aligned with fixed_graphs (skips building them).
  std::vector<ParentDistribution> fixed_distributions;

  void validate() const;
};

struct MetricsRecord {
  std::string method;
  double uniques_mean = 0.0, uniques_std = 0.0;
  double valids_mean = 0.0, valids_std = 0.0;
  double accuracy_mean = 0.0, accuracy_std = 0.0;
};

struct UniquesValids {
  std::size_t uniques = 0;
  std::size_t valids = 0;  // counted with multiplicity
};

UniquesValids uniques_and_valids(const ParentDistribution& dist, const Graph& g, Task task,
                                 const SamplerConfig& sampler, std::size_t k, Rng& rng);

/// Per run: fresh graphs, one distribution each, a single sample per graph;
/// accuracy is the valid fraction. Mean and population std over runs, with
/// uniques/valids of `samples_per_graph` draws aggregated the same way.
MetricsRecord accuracy_suite(const EvalConfig& cfg);

enum class ReuseDenominator { Union, First };

/// Mean over unordered sample pairs of |A ∩ B| / |A ∪ B| on tree edges (or
/// |A ∩ B| / |A| with ReuseDenominator::First). Two empty edge sets count 1.
double mean_edge_reuse(std::span<const PredecessorArray> samples,
                       ReuseDenominator denominator = ReuseDenominator::Union);

/// Name of the reference-algorithm series in study tables.
inline constexpr const char* kReferenceSeries = "Algorithm";

/// For every graph: the distribution, then `samples_per_graph` draws per
/// method, plus that many reruns of the reference algorithm.
struct SampleCollection {
  std::vector<Graph> graphs;
  std::vector<std::string> series;                            // method names + reference
  std::vector<std::vector<std::vector<PredecessorArray>>> samples;  // [series][graph][s]
};

SampleCollection collect_samples(const EvalConfig& cfg, std::span<const Method> methods);

/// Mean over graphs of cumulative unique valid solutions after s samples.
/// Columns: method,n,dist,sample_index,unique_valid_mean.
StudyTable coverage_study(const EvalConfig& cfg, std::span<const Method> methods);
StudyTable coverage_table(const EvalConfig& cfg, const SampleCollection& collection);

/// mean_edge_reuse of the first s samples, averaged over graphs, s >= 2.
/// Columns: method,n,dist,sample_index,mean_edge_reuse.
StudyTable edge_reuse_evolution(const EvalConfig& cfg, std::span<const Method> methods,
                                ReuseDenominator denominator = ReuseDenominator::Union);
StudyTable edge_reuse_table(const EvalConfig& cfg, const SampleCollection& collection,
                            ReuseDenominator denominator = ReuseDenominator::Union);

/// Columns: method,n,dist,uniques_mean,uniques_std,valids_mean,valids_std.
StudyTable table1(const EvalConfig& cfg, std::span<const MetricsRecord> records);
/// Columns: method,n,dist,acc_mean,acc_std.
StudyTable table2(const EvalConfig& cfg, std::span<const MetricsRecord> records);

/// Methods that apply to a task, in accuracy-table column order.
std::vector<Method> methods_for(Task task);

/// The stochastic samplers only; what the coverage and edge-reuse plots show.
std::vector<Method> sampler_methods(Task task);

}  // namespace multisol
