#include "multisol/validity.hpp"

#include <algorithm>
#include <stdexcept>

#include "multisol/algorithms.hpp"

namespace multisol {

std::string to_string(DfsCondition c) {
  switch (c) {
    case DfsCondition::StartNode: return "StartNode";
    case DfsCondition::Edges: return "Edges";
    case DfsCondition::NoCycle: return "NoCycle";
    case DfsCondition::RootUnreachableFromLower: return "RootUnreachableFromLower";
    case DfsCondition::ParentReachableFromMinAncestor: return "ParentReachableFromMinAncestor";
  }
  return "?";
}

std::string to_string(BfFailure f) {
  switch (f) {
    case BfFailure::None: return "";
    case BfFailure::SourceNotRoot: return "SourceNotRoot";
    case BfFailure::MissingEdge: return "MissingEdge";
    case BfFailure::PointerCycle: return "PointerCycle";
    case BfFailure::CostMismatch: return "CostMismatch";
  }
  return "?";
}

namespace {

void check_length(const Graph& g, const PredecessorArray& pi) {
  if (pi.size() != g.n()) {
    throw std::invalid_argument("predecessor array has length " + std::to_string(pi.size()) +
                                ", graph has n=" + std::to_string(g.n()));
  }
}

// True iff following parents from every vertex ends at a root within n steps.
bool pointers_acyclic(const PredecessorArray& pi) {
  const std::size_t n = pi.size();
  // 0 = unknown, 1 = on current walk, 2 = reaches a root
  std::vector<std::uint8_t> state(n, 0);
  std::vector<Vertex> walk;
  for (Vertex start = 0; start < n; ++start) {
    walk.clear();
    Vertex v = start;
    while (state[v] == 0 && !pi.is_root(v)) {
      state[v] = 1;
      walk.push_back(v);
      v = pi[v];
    }
    if (state[v] == 1) return false;
    for (Vertex w : walk) state[w] = 2;
    state[v] = 2;
  }
  return true;
}

}  // namespace

DfsVerdict check_dfs_valid(const Graph& g, const PredecessorArray& pi) {
  check_length(g, pi);
  const std::size_t n = g.n();
  DfsVerdict verdict;
  auto fail = [&](DfsCondition c) {
    verdict.valid = false;
    verdict.failed_conditions.push_back(c);
  };
  if (n == 0) return verdict;

  if (pi[0] != 0) fail(DfsCondition::StartNode);

  bool edges_ok = true;
  for (Vertex t = 0; t < n; ++t) {
    if (!pi.is_root(t) && !g.has_edge(pi[t], t)) edges_ok = false;
  }
  if (!edges_ok) fail(DfsCondition::Edges);

  if (!pointers_acyclic(pi)) fail(DfsCondition::NoCycle);

  const auto reach = reachability_matrix(g);
  auto reaches = [&](Vertex s, Vertex t) { return reach[s * n + t] != 0; };

  bool roots_ok = true;
  for (Vertex t = 0; t < n && roots_ok; ++t) {
    if (!pi.is_root(t)) continue;
    for (Vertex s = 0; s < t; ++s) {
      if (reaches(s, t)) {
        roots_ok = false;
        break;
      }
    }
  }
  if (!roots_ok) fail(DfsCondition::RootUnreachableFromLower);

  bool parents_ok = true;
  for (Vertex t = 0; t < n; ++t) {
    if (pi.is_root(t)) continue;
    Vertex lowest = 0;
    while (!reaches(lowest, t)) ++lowest;  // terminates: t reaches itself
    if (!reaches(lowest, pi[t])) {
      parents_ok = false;
      break;
    }
  }
  if (!parents_ok) fail(DfsCondition::ParentReachableFromMinAncestor);

  return verdict;
}

BfFailure diagnose_bf(const Graph& g, const PredecessorArray& pi) {
  const Vertex source = g.require_source();
  check_length(g, pi);
  if (!pi.is_root(source)) return BfFailure::SourceNotRoot;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!pi.is_root(v) && !g.has_edge(pi[v], v)) return BfFailure::MissingEdge;
  }
  if (!pointers_acyclic(pi)) return BfFailure::PointerCycle;
  const std::vector<Cost> expected = deterministic_bellman_ford_costs(g);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto cost = path_cost_from_source(g, pi, v);
    if (!cost || *cost != expected[v]) return BfFailure::CostMismatch;
  }
  return BfFailure::None;
}

bool check_bf_valid(const Graph& g, const PredecessorArray& pi) {
  return diagnose_bf(g, pi) == BfFailure::None;
}

bool is_valid(Task task, const Graph& g, const PredecessorArray& pi) {
  return task == Task::Dfs ? check_dfs_valid(g, pi).valid : check_bf_valid(g, pi);
}

std::string failure_tags(Task task, const Graph& g, const PredecessorArray& pi) {
  if (task == Task::BellmanFord) return to_string(diagnose_bf(g, pi));
  std::string tags;
  for (auto c : check_dfs_valid(g, pi).failed_conditions) {
    if (!tags.empty()) tags += ';';
    tags += to_string(c);
  }
  return tags;
}

}  // namespace multisol
