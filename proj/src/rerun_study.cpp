#include "multisol/rerun_study.hpp"

#include <algorithm>
#include <stdexcept>

#include "multisol/distribution.hpp"
#include "multisol/parallel.hpp"
#include "multisol/random.hpp"

namespace multisol {

std::vector<std::size_t> RerunStudyConfig::default_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 5; n <= 64; ++n) sizes.push_back(n);
  return sizes;
}

void RerunStudyConfig::validate() const {
  if (sizes.empty()) throw std::invalid_argument("rerun study needs at least one size");
  for (auto n : sizes) {
    if (n == 0) throw std::invalid_argument("graph sizes must be positive");
  }
  if (graphs_per_size == 0) throw std::invalid_argument("graphs per size must be positive");
  if (rerun_counts.size() < 2) throw std::invalid_argument("need at least two rerun counts");
  for (auto c : rerun_counts) {
    if (c == 0) throw std::invalid_argument("rerun counts must be positive");
  }
  if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in (0, 1]");
  }
}

StudyTable rerun_divergence_study(const RerunStudyConfig& cfg) {
  cfg.validate();
  std::vector<std::size_t> counts = cfg.rerun_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  if (counts.size() < 2) throw std::invalid_argument("need at least two distinct rerun counts");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = i + 1; j < counts.size(); ++j) pairs.emplace_back(i, j);
  }

  StudyTable table{{"size", "pair_lo", "pair_hi", "mean_kl", "std_kl"}, {}};
  for (std::size_t n : cfg.sizes) {
    // kl[g][pair]
    std::vector<std::vector<double>> kl(cfg.graphs_per_size);
    parallel_for(cfg.graphs_per_size, cfg.jobs, [&](std::size_t gi) {
      Graph g;
      if (cfg.graph_factory) {
        g = cfg.graph_factory(n, gi);
      } else {
        GraphSpec spec;
        spec.n = n;
        spec.task = cfg.task;
        spec.edge_probability = cfg.edge_probability;
        spec.seed = derive_seed(cfg.seed, {n, gi});
        g = generate_graph(spec);
      }
      std::vector<ParentDistribution> dists;
      for (auto c : counts) {
        dists.push_back(build_empirical(g, cfg.task, c, derive_seed(cfg.seed, {n, gi, c})));
      }
      for (const auto& [lo, hi] : pairs) kl[gi].push_back(kl_divergence(dists[lo], dists[hi]));
    });
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      std::vector<double> values;
      for (const auto& per_graph : kl) values.push_back(per_graph[k]);
      const MeanStd stats = mean_std(values);
      table.add_row({std::to_string(n), std::to_string(counts[pairs[k].first]),
                     std::to_string(counts[pairs[k].second]), format_number(stats.mean),
                     format_number(stats.std)});
    }
  }
  return table;
}

}  // namespace multisol
