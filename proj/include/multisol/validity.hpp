#pragma once

#include <string>
#include <vector>

#include "multisol/graph.hpp"

namespace multisol {

/// Necessary conditions for a DFS parent tree under ordered restarts.
enum class DfsCondition {
  StartNode,                      // pi[0] == 0
  Edges,                          // every non-root edge (pi[t], t) is in G
  NoCycle,                        // parent pointers reach a root within n steps
  RootUnreachableFromLower,       // no lower-index vertex reaches a root
  ParentReachableFromMinAncestor, // min vertex reaching t also reaches pi[t]
};

std::string to_string(DfsCondition c);

struct DfsVerdict {
  bool valid = true;
  std::vector<DfsCondition> failed_conditions;
};

/// Evaluates all five conditions and reports every failure (in enum order).
/// The conditions are necessary only: some non-DFS trees pass them.
DfsVerdict check_dfs_valid(const Graph& g, const PredecessorArray& pi);

enum class BfFailure { None, SourceNotRoot, MissingEdge, PointerCycle, CostMismatch };

std::string to_string(BfFailure f);

/// First failing check of the Bellman-Ford validity test, or None.
BfFailure diagnose_bf(const Graph& g, const PredecessorArray& pi);

/// pi[source] == source, tree edges exist in g, no pointer cycles, and every
/// vertex's chain cost matches the exact Bellman-Ford cost.
bool check_bf_valid(const Graph& g, const PredecessorArray& pi);

/// Dispatches on task; used by evaluation and the CLI.
bool is_valid(Task task, const Graph& g, const PredecessorArray& pi);

/// Comma-free tag list ("a;b;c") for reports.
std::string failure_tags(Task task, const Graph& g, const PredecessorArray& pi);

}  // namespace multisol
