#include "multisol/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "multisol/random.hpp"

namespace multisol {

ParentDistribution::ParentDistribution(std::size_t n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
  if (probs_.size() != n * n) throw std::invalid_argument("distribution matrix must be n x n");
}

ParentDistribution ParentDistribution::from_tree(const PredecessorArray& tree) {
  ParentDistribution d(tree.size());
  for (Vertex v = 0; v < tree.size(); ++v) d(v, tree[v]) = 1.0;
  return d;
}

void ParentDistribution::validate(double tolerance) const {
  for (Vertex i = 0; i < n_; ++i) {
    double sum = 0.0;
    for (double x : row(i)) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("distribution entry outside [0,1] in row " + std::to_string(i));
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > tolerance) {
      throw std::invalid_argument("distribution row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum));
    }
  }
}

PredecessorArray run_reference(const Graph& g, Task task, std::uint64_t seed, TiebreakMode mode) {
  const TiebreakPolicy policy{mode, seed};
  return task == Task::Dfs ? randomized_dfs(g, policy) : randomized_bellman_ford(g, policy);
}

std::vector<std::size_t> empirical_counts(const Graph& g, Task task, std::size_t runs,
                                          std::uint64_t seed, TiebreakMode mode) {
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  if (task == Task::BellmanFord) g.require_source();
  const std::size_t n = g.n();
  std::vector<std::size_t> counts(n * n, 0);
  for (std::size_t r = 0; r < runs; ++r) {
    const PredecessorArray pi = run_reference(g, task, derive_seed(seed, {r}), mode);
    for (Vertex v = 0; v < n; ++v) ++counts[v * n + pi[v]];
  }
  return counts;
}

ParentDistribution build_empirical(const Graph& g, Task task, std::size_t runs,
                                   std::uint64_t seed, TiebreakMode mode) {
  const auto counts = empirical_counts(g, task, runs, seed, mode);
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(runs);
  }
  return ParentDistribution(g.n(), std::move(probs));
}

double kl_divergence(const ParentDistribution& p, const ParentDistribution& q, double epsilon) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("KL divergence needs distributions of equal size");
  }
  const std::size_t n = p.n();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    double p_mass = 0.0, q_mass = 0.0;
    for (Vertex j = 0; j < n; ++j) {
      p_mass += p(i, j) + epsilon;
      q_mass += q(i, j) + epsilon;
    }
    double row_kl = 0.0;
    for (Vertex j = 0; j < n; ++j) {
      const double pj = (p(i, j) + epsilon) / p_mass;
      const double qj = (q(i, j) + epsilon) / q_mass;
      row_kl += pj * std::log(pj / qj);
    }
    total += row_kl;
  }
  // Rounding can leave identical-up-to-ulp rows a hair below zero.
  return std::max(0.0, total / static_cast<double>(n));
}

ParentDistribution perturb(const ParentDistribution& p, double alpha, std::uint64_t seed) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (alpha == 0.0) return p;
  const std::size_t n = p.n();
  ParentDistribution out(n);
  Rng rng(seed);
  std::vector<double> noise(n);
  for (Vertex i = 0; i < n; ++i) {
    double sum = 0.0;
    for (auto& x : noise) sum += (x = standard_exponential(rng));
    for (Vertex j = 0; j < n; ++j) {
      out(i, j) = (1.0 - alpha) * p(i, j) + alpha * noise[j] / sum;
    }
  }
  return out;
}

}  // namespace multisol
