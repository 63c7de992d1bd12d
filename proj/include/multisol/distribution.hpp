#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multisol/algorithms.hpp"
#include "multisol/graph.hpp"

namespace multisol {

/// Row-stochastic n x n matrix; row = child, column = candidate parent.
class ParentDistribution {
 public:
  ParentDistribution() = default;
  explicit ParentDistribution(std::size_t n) : n_(n), probs_(n * n, 0.0) {}
  ParentDistribution(std::size_t n, std::vector<double> probs);

  /// Point mass on the parents of `tree`.
  static ParentDistribution from_tree(const PredecessorArray& tree);

  std::size_t n() const { return n_; }
  double operator()(Vertex child, Vertex parent) const { return probs_[child * n_ + parent]; }
  double& operator()(Vertex child, Vertex parent) { return probs_[child * n_ + parent]; }
  std::span<const double> row(Vertex child) const {
    return {probs_.data() + child * n_, n_};
  }
  const std::vector<double>& values() const { return probs_; }

  /// Throws std::invalid_argument unless every entry is in [0,1] and every row
  /// sums to 1 within `tolerance`.
  void validate(double tolerance = 1e-9) const;

  bool operator==(const ParentDistribution&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> probs_;
};

inline constexpr std::size_t kDefaultRuns = 20;

/// One randomised run of the task's reference algorithm.
PredecessorArray run_reference(const Graph& g, Task task, std::uint64_t seed,
                               TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle);

/// Parent frequencies over `runs` randomised executions (run r uses
/// derive_seed(seed, {r})).
ParentDistribution build_empirical(const Graph& g, Task task, std::size_t runs,
                                   std::uint64_t seed,
                                   TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle);

/// Frequencies as exact counts; row sums equal `runs`.
std::vector<std::size_t> empirical_counts(const Graph& g, Task task, std::size_t runs,
                                          std::uint64_t seed,
                                          TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle);

inline constexpr double kKlSmoothing = 1e-8;

/// Mean over rows of KL(p_row || q_row), each row smoothed by adding
/// `epsilon` to every entry and renormalising.
double kl_divergence(const ParentDistribution& p, const ParentDistribution& q,
                     double epsilon = kKlSmoothing);

/// Mixes every row with an independent flat-Dirichlet draw:
/// (1 - alpha) * row + alpha * u. Stand-in for a model's predicted
/// distribution.
ParentDistribution perturb(const ParentDistribution& p, double alpha, std::uint64_t seed);

}  // namespace multisol
