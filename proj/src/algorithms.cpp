#include "multisol/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "multisol/random.hpp"

namespace multisol {

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Shared traversal. `pick_child(current, visited)` returns the next child of
// `current` or kNone when every candidate is exhausted.
template <class PickChild>
PredecessorArray ordered_restart_dfs(const Graph& g, PickChild&& pick_child) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});

  for (Vertex root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    parent[root] = root;
    Vertex current = root;
    while (true) {
      const Vertex child = pick_child(current, visited);
      if (child != kNone) {
        visited[child] = 1;
        parent[child] = current;
        current = child;
        continue;
      }
      if (parent[current] == current) break;  // backtracked past the root
      current = parent[current];
    }
  }
  return PredecessorArray(std::move(parent));
}

std::vector<Vertex> non_start_vertices(std::size_t n) {
  std::vector<Vertex> order;
  for (Vertex v = 1; v < n; ++v) order.push_back(v);
  return order;
}

void check_limit(const Graph& g, std::size_t limit) {
  if (g.n() > limit) {
    throw std::invalid_argument("enumeration limited to n <= " + std::to_string(limit) +
                                ", got n=" + std::to_string(g.n()));
  }
}

}  // namespace

PredecessorArray dfs_with_order(const Graph& g, std::span<const Vertex> tiebreak_order) {
  return ordered_restart_dfs(g, [&](Vertex current, const std::vector<std::uint8_t>& visited) {
    for (Vertex candidate : tiebreak_order) {
      if (g.has_edge(current, candidate) && !visited[candidate]) return candidate;
    }
    return kNone;
  });
}

PredecessorArray randomized_dfs(const Graph& g, const TiebreakPolicy& policy, bool strict) {
  if (strict && !g.directed()) {
    throw std::invalid_argument("randomized_dfs (strict) requires a directed graph");
  }
  Rng rng(policy.seed);
  std::vector<Vertex> order = non_start_vertices(g.n());
  shuffle(std::span<Vertex>(order), rng);
  if (policy.mode == TiebreakMode::PerRunGlobalShuffle) return dfs_with_order(g, order);

  return ordered_restart_dfs(g, [&](Vertex current, const std::vector<std::uint8_t>& visited) {
    shuffle(std::span<Vertex>(order), rng);
    for (Vertex candidate : order) {
      if (g.has_edge(current, candidate) && !visited[candidate]) return candidate;
    }
    return kNone;
  });
}

PredecessorArray randomized_bellman_ford(const Graph& g, const TiebreakPolicy& policy) {
  const Vertex source = g.require_source();
  const std::size_t n = g.n();
  std::vector<TreeEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out_neighbors(u)) edges.emplace_back(u, v);
  }

  std::vector<Cost> dist(n, kUnreachable);
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  dist[source] = 0;

  Rng rng(policy.seed);
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    shuffle(std::span<TreeEdge>(edges), rng);
    bool changed = false;
    for (const auto& [u, v] : edges) {
      if (dist[u] == kUnreachable) continue;
      const Cost candidate = dist[u] + g.weight_units(u, v);
      if (candidate < dist[v]) {
        dist[v] = candidate;
        parent[v] = u;
        changed = true;
      }
    }
    // A quiet pass stays quiet under every later order, and each run owns its
    // generator, so stopping here does not change the output.
    if (!changed) break;
  }
  return PredecessorArray(std::move(parent));
}

std::vector<Cost> deterministic_bellman_ford_costs(const Graph& g) {
  const Vertex source = g.require_source();
  const std::size_t n = g.n();
  std::vector<Cost> dist(n, kUnreachable);
  dist[source] = 0;
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    bool changed = false;
    for (Vertex u = 0; u < n; ++u) {
      if (dist[u] == kUnreachable) continue;
      for (Vertex v : g.out_neighbors(u)) {
        const Cost candidate = dist[u] + g.weight_units(u, v);
        if (candidate < dist[v]) {
          dist[v] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

std::vector<WeightedTree> enumerate_dfs_trees(const Graph& g, TiebreakMode mode,
                                              std::size_t limit) {
  check_limit(g, limit);
  const std::size_t n = g.n();
  std::map<PredecessorArray, double> found;

  if (mode == TiebreakMode::PerRunGlobalShuffle) {
    std::vector<Vertex> order = non_start_vertices(n);
    std::size_t total = 0;
    std::map<PredecessorArray, std::size_t> counts;
    do {
      ++counts[dfs_with_order(g, order)];
      ++total;
    } while (std::next_permutation(order.begin(), order.end()));
    for (const auto& [tree, count] : counts) {
      found[tree] = static_cast<double>(count) / static_cast<double>(total);
    }
  } else {
    // Each lookup reshuffles, so the next child is uniform over the unvisited
    // out-neighbours; branch over all of them.
    struct State {
      std::vector<std::uint8_t> visited;
      std::vector<Vertex> parent;
      Vertex current;
    };
    std::function<void(State, double)> explore = [&](State s, double prob) {
      while (true) {
        if (s.current == kNone) {
          Vertex root = 0;
          while (root < n && s.visited[root]) ++root;
          if (root == n) {
            found[PredecessorArray(s.parent)] += prob;
            return;
          }
          s.visited[root] = 1;
          s.parent[root] = root;
          s.current = root;
        }
        std::vector<Vertex> options;
        for (Vertex c : g.out_neighbors(s.current)) {
          if (c != 0 && !s.visited[c]) options.push_back(c);
        }
        if (options.empty()) {
          s.current = s.parent[s.current] == s.current ? kNone : s.parent[s.current];
          continue;
        }
        const double share = prob / static_cast<double>(options.size());
        for (Vertex c : options) {
          State next = s;
          next.visited[c] = 1;
          next.parent[c] = s.current;
          next.current = c;
          explore(std::move(next), share);
        }
        return;
      }
    };
    State start{std::vector<std::uint8_t>(n, 0), std::vector<Vertex>(n), kNone};
    std::iota(start.parent.begin(), start.parent.end(), Vertex{0});
    explore(std::move(start), 1.0);
  }

  std::vector<WeightedTree> out;
  out.reserve(found.size());
  for (auto& [tree, freq] : found) out.push_back({tree, freq});
  return out;
}

std::vector<PredecessorArray> enumerate_shortest_path_trees(const Graph& g, std::size_t limit) {
  check_limit(g, limit);
  const Vertex source = g.require_source();
  const std::size_t n = g.n();
  const std::vector<Cost> cost = deterministic_bellman_ford_costs(g);

  std::vector<std::vector<Vertex>> choices(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == source || cost[v] == kUnreachable) {
      choices[v] = {v};
      continue;
    }
    for (Vertex u : g.in_neighbors(v)) {
      if (cost[u] != kUnreachable && cost[u] + g.weight_units(u, v) == cost[v]) {
        choices[v].push_back(u);
      }
    }
  }

  std::vector<PredecessorArray> trees;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Vertex> parents(n);
    for (Vertex v = 0; v < n; ++v) parents[v] = choices[v][digit[v]];
    trees.emplace_back(std::move(parents));
    Vertex v = 0;
    while (v < n && ++digit[v] == choices[v].size()) digit[v++] = 0;
    if (v == n) break;
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

}  // namespace multisol
