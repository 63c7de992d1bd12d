#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "multisol/graph.hpp"
#include "multisol/study_table.hpp"

namespace multisol {

/// How much an empirical distribution moves with the number of algorithm
/// reruns behind it.
struct RerunStudyConfig {
  std::vector<std::size_t> sizes = default_sizes();
  std::size_t graphs_per_size = 100;
  std::vector<std::size_t> rerun_counts{20, 50, 100};
  Task task = Task::BellmanFord;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Replaces random generation when set: (size, graph index) -> graph.
  std::function<Graph(std::size_t, std::size_t)> graph_factory;

  static std::vector<std::size_t> default_sizes();  // 5..64
  void validate() const;
};

/// Per (size, lo, hi) pair of rerun counts: mean and std over graphs of
/// kl_divergence(P_lo, P_hi). Columns: size,pair_lo,pair_hi,mean_kl,std_kl.
///
/// Graph g of size n uses derive_seed(seed, {n, g}); its distribution for
/// rerun count c uses derive_seed(seed, {n, g, c}), so the counts are
/// independent samples rather than nested prefixes.
StudyTable rerun_divergence_study(const RerunStudyConfig& cfg);

}  // namespace multisol
