#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multisol/graph.hpp"

namespace multisol {

enum class TiebreakMode {
  /// One shuffled order of V \ {0}, fixed for the whole run.
  PerRunGlobalShuffle,
  /// A fresh shuffle every time a vertex looks for its next child.
  PerNodeShuffle,
};

struct TiebreakPolicy {
  TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle;
  std::uint64_t seed = 0;
};

/// DFS with ordered restarts and randomised child exploration.
///
/// Restarts happen at the lowest-index unvisited vertex. Within a component
/// the next child of the current vertex is the first unvisited out-neighbour
/// in the tiebreak order. When `strict` is set, undirected input is rejected.
PredecessorArray randomized_dfs(const Graph& g, const TiebreakPolicy& policy,
                                bool strict = false);

/// Same traversal with an explicit child-preference order over V \ {0}
/// (vertices absent from the order are never explored as children).
PredecessorArray dfs_with_order(const Graph& g, std::span<const Vertex> tiebreak_order);

/// Bellman-Ford over n-1 passes, shuffling the edge relaxation order in every
/// pass and only accepting strictly cheaper paths. Unreachable vertices keep
/// themselves as parent.
PredecessorArray randomized_bellman_ford(const Graph& g, const TiebreakPolicy& policy);

/// Exact minimum path costs from the source, in weight units; kUnreachable
/// where no path exists.
std::vector<Cost> deterministic_bellman_ford_costs(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

struct WeightedTree {
  PredecessorArray tree;
  double frequency = 0.0;
};

/// Every tree randomized_dfs can output under `mode`, with its exact
/// probability. Sorted by tree.
std::vector<WeightedTree> enumerate_dfs_trees(const Graph& g, TiebreakMode mode,
                                              std::size_t limit = kDefaultEnumerationLimit);

/// Every shortest-path tree of g rooted at its source, sorted. Unreachable
/// vertices are their own parent in every member.
std::vector<PredecessorArray> enumerate_shortest_path_trees(
    const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace multisol
