#include "multisol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multisol/random.hpp"

namespace multisol {

std::string to_string(Task task) { return task == Task::Dfs ? "dfs" : "bf"; }

Task parse_task(const std::string& name) {
  if (name == "dfs") return Task::Dfs;
  if (name == "bf") return Task::BellmanFord;
  throw std::invalid_argument("unknown task '" + name + "' (expected dfs|bf)");
}

Graph::Graph(std::size_t n, bool directed, std::int64_t scale)
    : n_(n), directed_(directed), scale_(scale), units_(n * n, 0), out_(n), in_(n) {
  if (scale <= 0) throw std::invalid_argument("weight scale must be positive");
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
  }
}

void Graph::set_source(std::optional<Vertex> s) {
  if (s) check_vertex(*s);
  source_ = s;
}

Vertex Graph::require_source() const {
  if (!source_) throw std::invalid_argument("graph has no source vertex");
  return *source_;
}

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) list.insert(it, v);
}

void erase_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

void Graph::add_edge(Vertex u, Vertex v, std::int64_t units) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (units < 0) throw std::invalid_argument("negative weights are not supported");
  auto set_one = [this](Vertex a, Vertex b, std::int64_t w) {
    units_[a * n_ + b] = w;
    if (w != 0) {
      insert_sorted(out_[a], b);
      insert_sorted(in_[b], a);
    } else {
      erase_sorted(out_[a], b);
      erase_sorted(in_[b], a);
    }
  };
  set_one(u, v, units);
  if (!directed_) set_one(v, u, units);
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (const auto& list : out_) count += list.size();
  return directed_ ? count : count / 2;
}

void Graph::rescale(std::int64_t new_scale) {
  if (new_scale <= 0 || new_scale % scale_ != 0) {
    throw std::invalid_argument("new scale must be a positive multiple of the old one");
  }
  const std::int64_t factor = new_scale / scale_;
  for (auto& w : units_) w *= factor;
  scale_ = new_scale;
}

void Graph::validate() const {
  if (units_.size() != n_ * n_) throw std::invalid_argument("weight matrix has wrong size");
  for (Vertex i = 0; i < n_; ++i) {
    if (units_[i * n_ + i] != 0) throw std::invalid_argument("self-loop present");
    for (Vertex j = 0; j < n_; ++j) {
      if (units_[i * n_ + j] < 0) throw std::invalid_argument("negative weight present");
      if (!directed_ && units_[i * n_ + j] != units_[j * n_ + i]) {
        throw std::invalid_argument("undirected graph has an asymmetric weight matrix");
      }
    }
  }
  if (source_ && *source_ >= n_) throw std::invalid_argument("source out of range");
}

PredecessorArray::PredecessorArray(std::vector<Vertex> parents) : parents_(std::move(parents)) {
  for (auto p : parents_) {
    if (p >= parents_.size()) {
      throw std::out_of_range("predecessor entry " + std::to_string(p) +
                              " out of range for n=" + std::to_string(parents_.size()));
    }
  }
}

std::size_t PredecessorArray::root_count() const {
  std::size_t roots = 0;
  for (Vertex v = 0; v < parents_.size(); ++v) roots += is_root(v) ? 1 : 0;
  return roots;
}

std::string to_string(const PredecessorArray& pi) {
  std::ostringstream out;
  out << '[';
  for (Vertex v = 0; v < pi.size(); ++v) out << (v ? "," : "") << pi[v];
  out << ']';
  return out.str();
}

void GraphSpec::validate() const {
  if (n == 0) throw std::invalid_argument("graph size n must be at least 1");
  if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in (0, 1]");
  }
  if (weight_set.empty()) throw std::invalid_argument("weight set must be non-empty");
  for (auto w : weight_set) {
    if (w <= 0) throw std::invalid_argument("weights must be positive integers");
  }
}

Graph generate_graph(const GraphSpec& spec) {
  spec.validate();
  const bool directed = spec.directed.value_or(spec.task == Task::Dfs);
  const bool weighted = spec.weighted.value_or(spec.task == Task::BellmanFord);
  const std::int64_t max_weight = *std::max_element(spec.weight_set.begin(), spec.weight_set.end());
  const std::int64_t scale = (weighted && spec.normalize) ? max_weight : 1;

  Graph g(spec.n, directed, scale);
  Rng rng(spec.seed);
  for (Vertex i = 0; i < spec.n; ++i) {
    for (Vertex j = directed ? 0 : i + 1; j < spec.n; ++j) {
      if (i == j) continue;
      if (uniform_unit(rng) >= spec.edge_probability) continue;
      std::int64_t units = 1;
      if (weighted) units = spec.weight_set[uniform_below(rng, spec.weight_set.size())];
      g.add_edge(i, j, units);
    }
  }
  if (spec.task == Task::BellmanFord) g.set_source(0);
  return g;
}

std::vector<std::uint8_t> reachability_matrix(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> reach(n * n, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    std::uint8_t* row = reach.data() + s * n;
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.out_neighbors(u)) {
        if (!row[v]) {
          row[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

bool reachable(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) return true;
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.out_neighbors(u)) {
      if (v == t) return true;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

std::vector<TreeEdge> tree_edges(const PredecessorArray& pi) {
  std::vector<TreeEdge> edges;
  edges.reserve(pi.size());
  for (Vertex v = 0; v < pi.size(); ++v) {
    if (!pi.is_root(v)) edges.emplace_back(pi[v], v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<Cost> path_cost_from_source(const Graph& g, const PredecessorArray& pi, Vertex v) {
  const Vertex source = g.require_source();
  g.check_vertex(v);
  if (pi.size() != g.n()) throw std::invalid_argument("predecessor array length differs from n");
  if (v != source && pi.is_root(v)) return kUnreachable;

  Cost cost = 0;
  Vertex current = v;
  for (std::size_t steps = 0; steps <= g.n(); ++steps) {
    if (current == source) return cost;
    const Vertex parent = pi[current];
    if (parent == current) return std::nullopt;  // chain ends at a foreign root
    if (!g.has_edge(parent, current)) return std::nullopt;
    cost += g.weight_units(parent, current);
    current = parent;
  }
  return std::nullopt;  // pointer cycle
}

}  // namespace multisol
