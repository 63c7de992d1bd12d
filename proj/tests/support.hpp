#pragma once

// Fixtures and brute-force oracles shared by the unit tests. The oracles are
// written independently of the library: plain loops over adjacency matrices,
// no use of the library's reachability, costs or enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "multisol/graph.hpp"
#include "multisol/random.hpp"

namespace fixtures {

using multisol::Graph;
using multisol::PredecessorArray;
using multisol::Vertex;

inline PredecessorArray pa(std::vector<Vertex> v) { return PredecessorArray(std::move(v)); }

// Directed, V={0,1,2}, edges (0,1),(0,2),(1,2),(2,1).
inline Graph g3() {
  Graph g(3, true);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 2, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 1, 1);
  return g;
}

// Undirected square 0-1-3-2-0, every edge `units` over `scale`, source 0.
inline Graph g4(std::int64_t units = 1, std::int64_t scale = 1) {
  Graph g(4, false, scale);
  g.add_edge(0, 1, units);
  g.add_edge(0, 2, units);
  g.add_edge(1, 3, units);
  g.add_edge(2, 3, units);
  g.set_source(0);
  return g;
}

inline Graph line(std::size_t n, bool directed = true) {
  Graph g(n, directed);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v, 1);
  if (!directed) g.set_source(0);
  return g;
}

// Arbitrary graph with integer weights drawn from {1,2,3}.
inline Graph random_graph(std::size_t n, double p, bool directed, std::uint64_t seed) {
  multisol::Rng rng(seed);
  Graph g(n, directed);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || multisol::uniform_unit(rng) >= p) continue;
      g.add_edge(u, v, 1 + static_cast<std::int64_t>(multisol::uniform_below(rng, 3)));
    }
  }
  if (!directed) g.set_source(0);
  return g;
}

}  // namespace fixtures

namespace oracle {

using multisol::Graph;
using multisol::PredecessorArray;
using multisol::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v) a[u][v] = g.weight_units(u, v) != 0;
  return a;
}

// Warshall on the boolean matrix, reflexive.
inline std::vector<std::vector<bool>> closure(const Graph& g) {
  auto r = adjacency(g);
  const std::size_t n = g.n();
  for (Vertex v = 0; v < n; ++v) r[v][v] = true;
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Textbook recursive DFS: ordered restarts, children tried in `order`.
inline std::vector<Vertex> dfs(const Graph& g, const std::vector<Vertex>& order) {
  const auto a = adjacency(g);
  std::vector<Vertex> parent(g.n());
  std::vector<bool> seen(g.n(), false);
  std::function<void(Vertex)> visit = [&](Vertex u) {
    seen[u] = true;
    for (Vertex c : order) {
      if (a[u][c] && !seen[c]) {
        parent[c] = u;
        visit(c);
      }
    }
  };
  for (Vertex r = 0; r < g.n(); ++r) {
    if (seen[r]) continue;
    parent[r] = r;
    visit(r);
  }
  return parent;
}

// All outputs of per-run-shuffle DFS with their probabilities, by running
// the textbook DFS on every permutation of 1..n-1.
inline std::map<std::vector<Vertex>, double> dfs_trees(const Graph& g) {
  std::vector<Vertex> order;
  for (Vertex v = 1; v < g.n(); ++v) order.push_back(v);
  std::map<std::vector<Vertex>, double> out;
  std::size_t total = 0;
  do {
    ++out[dfs(g, order)];
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& [tree, count] : out) count /= static_cast<double>(total);
  return out;
}

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Floyd-Warshall costs from the source in weight units.
inline std::vector<std::int64_t> costs(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (g.weight_units(u, v) != 0) d[u][v] = g.weight_units(u, v);
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d[*g.source()];
}

// With positive weights, a shortest-path tree is characterised locally:
// every reachable non-source vertex points along a tight edge, everything
// else points at itself.
inline bool is_shortest_path_tree(const Graph& g, const std::vector<std::int64_t>& c,
                                  const std::vector<Vertex>& pi) {
  const Vertex s = *g.source();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == s || c[v] == kInf) {
      if (pi[v] != v) return false;
      continue;
    }
    const Vertex u = pi[v];
    if (u == v || g.weight_units(u, v) == 0 || c[u] == kInf) return false;
    if (c[u] + g.weight_units(u, v) != c[v]) return false;
  }
  return true;
}

// Calls fn on each of the n^n arrays over 0..n-1.
template <typename Fn>
void for_each_array(std::size_t n, Fn fn) {
  std::vector<Vertex> pi(n, 0);
  while (true) {
    fn(pi);
    std::size_t i = 0;
    while (i < n && ++pi[i] == n) pi[i++] = 0;
    if (i == n) return;
  }
}

// Row-mean smoothed KL, written out longhand.
inline double kl(const std::vector<double>& p, const std::vector<double>& q, std::size_t n,
                 double eps = 1e-8) {
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ps = 0.0, qs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      ps += p[i * n + j] + eps;
      qs += q[i * n + j] + eps;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double a = (p[i * n + j] + eps) / ps;
      const double b = (q[i * n + j] + eps) / qs;
      total += a * std::log(a / b);
    }
  }
  return total / static_cast<double>(n);
}

}  // namespace oracle
