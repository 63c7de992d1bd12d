#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multisol {

using Vertex = std::size_t;

/// Path cost in integer weight units; divide by Graph::scale() for the value.
using Cost = std::int64_t;
inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max();

enum class Task { Dfs, BellmanFord };

std::string to_string(Task task);
Task parse_task(const std::string& name);

/// Weighted adjacency over vertices 0..n-1.
///
/// Weights are exact rationals stored as integer units over a shared
/// denominator (`scale`), so path costs can be compared without tolerance.
/// A weight of zero means "no edge". Undirected graphs keep the matrix
/// symmetric; add_edge mirrors automatically.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed, std::int64_t scale = 1);

  std::size_t n() const { return n_; }
  bool directed() const { return directed_; }
  std::int64_t scale() const { return scale_; }

  const std::optional<Vertex>& source() const { return source_; }
  void set_source(std::optional<Vertex> s);
  /// Throws std::invalid_argument when the graph has no source.
  Vertex require_source() const;

  void add_edge(Vertex u, Vertex v, std::int64_t units);
  bool has_edge(Vertex u, Vertex v) const { return units_[u * n_ + v] != 0; }
  std::int64_t weight_units(Vertex u, Vertex v) const { return units_[u * n_ + v]; }
  double weight(Vertex u, Vertex v) const {
    return static_cast<double>(weight_units(u, v)) / static_cast<double>(scale_);
  }

  /// Out-neighbours in ascending order.
  const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[u]; }
  /// In-neighbours in ascending order.
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

  /// Directed edge count, or unordered pair count for undirected graphs.
  std::size_t edge_count() const;

  /// Re-expresses every weight over a new denominator that is a multiple of
  /// the current one.
  void rescale(std::int64_t new_scale);

  /// Throws std::invalid_argument if any structural invariant is broken.
  void validate() const;

  void check_vertex(Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  bool directed_ = true;
  std::int64_t scale_ = 1;
  std::optional<Vertex> source_;
  std::vector<std::int64_t> units_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// pi[i] is the parent of vertex i; roots are their own parent.
///
/// Only the index range is enforced on construction. Samplers may legitimately
/// produce arrays without a root (pointer cycles) and those have to be
/// representable so the validity checks can reject them.
class PredecessorArray {
 public:
  PredecessorArray() = default;
  explicit PredecessorArray(std::vector<Vertex> parents);

  std::size_t size() const { return parents_.size(); }
  Vertex operator[](Vertex v) const { return parents_[v]; }
  const std::vector<Vertex>& parents() const { return parents_; }

  bool is_root(Vertex v) const { return parents_[v] == v; }
  std::size_t root_count() const;

  auto operator<=>(const PredecessorArray&) const = default;
  bool operator==(const PredecessorArray&) const = default;

 private:
  std::vector<Vertex> parents_;
};

std::string to_string(const PredecessorArray& pi);

struct GraphSpec {
  std::size_t n = 5;
  double edge_probability = 0.5;
  Task task = Task::BellmanFord;
  std::vector<std::int64_t> weight_set{1, 2, 3};
  bool normalize = true;
  std::uint64_t seed = 0;
  // Task conventions (DFS: directed/unweighted, BF: undirected/weighted)
  // apply unless overridden here.
  std::optional<bool> directed;
  std::optional<bool> weighted;

  void validate() const;
};

Graph generate_graph(const GraphSpec& spec);

/// True iff a directed path s -> t exists. reachable(g, v, v) is always true.
bool reachable(const Graph& g, Vertex s, Vertex t);

/// Flattened n*n matrix, entry [s*n + t] = reachable(g, s, t).
std::vector<std::uint8_t> reachability_matrix(const Graph& g);

using TreeEdge = std::pair<Vertex, Vertex>;

/// {(pi[v], v) : pi[v] != v}, sorted.
std::vector<TreeEdge> tree_edges(const PredecessorArray& pi);

/// Cost of the parent-pointer chain from v back to the source.
///
/// nullopt when the chain enters a pointer cycle, uses an edge missing from g
/// or stops at a root other than the source. A vertex that is its own parent
/// (and is not the source) is unreachable and costs kUnreachable.
std::optional<Cost> path_cost_from_source(const Graph& g, const PredecessorArray& pi,
                                          Vertex v);

}  // namespace multisol
