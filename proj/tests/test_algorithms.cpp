#include <map>
#include <set>

#include "doctest.h"
#include "multisol/algorithms.hpp"
#include "support.hpp"

using namespace multisol;
using fixtures::pa;

namespace {

TiebreakPolicy policy(std::uint64_t seed, TiebreakMode mode = TiebreakMode::PerRunGlobalShuffle) {
  return TiebreakPolicy{mode, seed};
}

std::set<PredecessorArray> dfs_members(const Graph& g, TiebreakMode mode) {
  std::set<PredecessorArray> out;
  for (const auto& w : enumerate_dfs_trees(g, mode)) out.insert(w.tree);
  return out;
}

}  // namespace

TEST_CASE("randomized_dfs on G3 splits evenly between two trees") {
  const Graph g = fixtures::g3();
  std::map<PredecessorArray, int> seen;
  const int runs = 4000;
  for (int s = 0; s < runs; ++s) ++seen[randomized_dfs(g, policy(s))];
  REQUIRE(seen.size() == 2);
  CHECK(seen.count(pa({0, 0, 1})) == 1);
  CHECK(seen.count(pa({0, 2, 0})) == 1);
  CHECK(seen[pa({0, 0, 1})] / double(runs) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("randomized_dfs trivial graphs") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(randomized_dfs(fixtures::line(3), policy(s)) == pa({0, 0, 1}));
    CHECK(randomized_dfs(Graph(3, true), policy(s)) == pa({0, 1, 2}));
    CHECK(randomized_dfs(fixtures::line(3), policy(s, TiebreakMode::PerNodeShuffle)) ==
          pa({0, 0, 1}));
  }
  CHECK(randomized_dfs(Graph(1, true), policy(0)) == pa({0}));
}

TEST_CASE("randomized_dfs strict mode rejects undirected graphs") {
  const Graph u = fixtures::line(3, false);
  CHECK_THROWS_AS(randomized_dfs(u, policy(0), true), std::invalid_argument);
  CHECK_NOTHROW(randomized_dfs(u, policy(0)));
}

TEST_CASE("identity tiebreak order reproduces canonical DFS") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const Graph g = fixtures::random_graph(n, 0.3, true, seed);
    std::vector<Vertex> order;
    for (Vertex v = 1; v < n; ++v) order.push_back(v);
    REQUIRE(dfs_with_order(g, order).parents() == oracle::dfs(g, order));
  }
}

TEST_CASE("enumerate_dfs_trees examples") {
  const auto g3 = enumerate_dfs_trees(fixtures::g3(), TiebreakMode::PerRunGlobalShuffle);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].tree == pa({0, 0, 1}));
  CHECK(g3[1].tree == pa({0, 2, 0}));
  CHECK(g3[0].frequency == doctest::Approx(0.5));
  CHECK(g3[1].frequency == doctest::Approx(0.5));

  const auto l = enumerate_dfs_trees(fixtures::line(3), TiebreakMode::PerNodeShuffle);
  REQUIRE(l.size() == 1);
  CHECK(l[0].tree == pa({0, 0, 1}));
  CHECK(l[0].frequency == doctest::Approx(1.0));

  const auto e = enumerate_dfs_trees(Graph(2, true), TiebreakMode::PerRunGlobalShuffle);
  REQUIRE(e.size() == 1);
  CHECK(e[0].tree == pa({0, 1}));

  CHECK_THROWS_AS(enumerate_dfs_trees(Graph(9, true), TiebreakMode::PerRunGlobalShuffle),
                  std::invalid_argument);
  CHECK_NOTHROW(enumerate_dfs_trees(Graph(9, true), TiebreakMode::PerRunGlobalShuffle, 9));
}

TEST_CASE("global-shuffle enumeration matches the permutation oracle exactly") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const Graph g = fixtures::random_graph(n, 0.4, true, seed);
    const auto want = oracle::dfs_trees(g);
    const auto got = enumerate_dfs_trees(g, TiebreakMode::PerRunGlobalShuffle);
    REQUIRE(got.size() == want.size());
    for (const auto& w : got) {
      auto it = want.find(w.tree.parents());
      REQUIRE(it != want.end());
      CHECK(w.frequency == doctest::Approx(it->second));
    }
  }
}

TEST_CASE("enumeration frequencies sum to one in both modes") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = fixtures::random_graph(2 + seed % 5, 0.5, true, seed);
    for (auto mode : {TiebreakMode::PerRunGlobalShuffle, TiebreakMode::PerNodeShuffle}) {
      double total = 0;
      for (const auto& w : enumerate_dfs_trees(g, mode)) total += w.frequency;
      CHECK(total == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("every randomized_dfs output is an enumerated member, both modes") {
  for (std::uint64_t gs = 0; gs < 40; ++gs) {
    const Graph g = fixtures::random_graph(3 + gs % 4, 0.45, true, gs);
    for (auto mode : {TiebreakMode::PerRunGlobalShuffle, TiebreakMode::PerNodeShuffle}) {
      const auto members = dfs_members(g, mode);
      for (std::uint64_t s = 0; s < 100; ++s) {
        REQUIRE(members.count(randomized_dfs(g, policy(derive_seed(gs, {s}), mode))) == 1);
      }
    }
  }
}

TEST_CASE("per-node enumeration frequencies match Monte-Carlo") {
  // 0 -> {1,2,3}, 1 -> 2, 3 -> 2: several trees with unequal weights.
  Graph g(4, true);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 2, 1);
  g.add_edge(0, 3, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(3, 2, 1);
  const auto trees = enumerate_dfs_trees(g, TiebreakMode::PerNodeShuffle);
  std::map<PredecessorArray, int> seen;
  const int runs = 20000;
  for (int s = 0; s < runs; ++s) ++seen[randomized_dfs(g, policy(s, TiebreakMode::PerNodeShuffle))];
  CHECK(seen.size() == trees.size());
  for (const auto& w : trees) {
    CHECK(seen[w.tree] / double(runs) == doctest::Approx(w.frequency).epsilon(0.05));
  }
}

TEST_CASE("randomized_bellman_ford on G4 finds both trees") {
  const Graph g = fixtures::g4();
  std::set<Vertex> parents_of_3;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto pi = randomized_bellman_ford(g, policy(s));
    CHECK(pi[0] == 0);
    CHECK(pi[1] == 0);
    CHECK(pi[2] == 0);
    parents_of_3.insert(pi[3]);
  }
  CHECK(parents_of_3 == std::set<Vertex>{1, 2});
}

TEST_CASE("randomized_bellman_ford trivial cases") {
  const Graph path = fixtures::line(3, false);
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(randomized_bellman_ford(path, policy(s)) == pa({0, 0, 1}));

  Graph iso(4, false);
  iso.add_edge(0, 1, 1);
  iso.add_edge(1, 2, 1);
  iso.set_source(0);
  CHECK(randomized_bellman_ford(iso, policy(1))[3] == 3);
  CHECK_THROWS_AS(randomized_bellman_ford(Graph(2, false), policy(0)), std::invalid_argument);
}

TEST_CASE("deterministic_bellman_ford_costs") {
  CHECK(deterministic_bellman_ford_costs(fixtures::g4()) == std::vector<Cost>{0, 1, 1, 2});
  Graph one(1, false);
  one.set_source(0);
  CHECK(deterministic_bellman_ford_costs(one) == std::vector<Cost>{0});
  Graph iso(3, false);
  iso.add_edge(0, 1, 2);
  iso.set_source(0);
  CHECK(deterministic_bellman_ford_costs(iso) == std::vector<Cost>{0, 2, kUnreachable});
}

TEST_CASE("BF costs and trees agree with Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const Graph g = fixtures::random_graph(n, 0.5, false, seed);
    const auto want = oracle::costs(g);
    REQUIRE(deterministic_bellman_ford_costs(g) == want);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto pi = randomized_bellman_ford(g, policy(s));
      REQUIRE(oracle::is_shortest_path_tree(g, want, pi.parents()));
      for (Vertex v = 0; v < n; ++v) REQUIRE(path_cost_from_source(g, pi, v) == want[v]);
    }
  }
}

TEST_CASE("enumerate_shortest_path_trees") {
  const auto g4 = enumerate_shortest_path_trees(fixtures::g4());
  REQUIRE(g4.size() == 2);
  CHECK(g4[0] == pa({0, 0, 0, 1}));
  CHECK(g4[1] == pa({0, 0, 0, 2}));

  CHECK(enumerate_shortest_path_trees(fixtures::line(4, false)).size() == 1);
  Graph one(1, false);
  one.set_source(0);
  CHECK(enumerate_shortest_path_trees(one) == std::vector<PredecessorArray>{pa({0})});
  Graph big(9, false);
  big.set_source(0);
  CHECK_THROWS_AS(enumerate_shortest_path_trees(big), std::invalid_argument);
}

TEST_CASE("shortest-path enumeration equals the brute-force tree set") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const Graph g = fixtures::random_graph(n, 0.6, false, 1000 + seed);
    const auto c = oracle::costs(g);
    std::set<std::vector<Vertex>> want;
    oracle::for_each_array(n, [&](const std::vector<Vertex>& pi) {
      if (oracle::is_shortest_path_tree(g, c, pi)) want.insert(pi);
    });
    std::set<std::vector<Vertex>> got;
    for (const auto& pi : enumerate_shortest_path_trees(g)) got.insert(pi.parents());
    REQUIRE(got == want);
  }
}

TEST_CASE("randomized algorithms are seed-deterministic") {
  const Graph d = fixtures::random_graph(8, 0.4, true, 77);
  const Graph u = fixtures::random_graph(8, 0.4, false, 77);
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(randomized_dfs(d, policy(s)) == randomized_dfs(d, policy(s)));
    CHECK(randomized_bellman_ford(u, policy(s)) == randomized_bellman_ford(u, policy(s)));
  }
}
