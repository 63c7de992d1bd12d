#include "multisol/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace multisol {

std::string to_string(Method m) {
  switch (m) {
    case Method::Argmax: return "argmax";
    case Method::Upwards: return "upwards";
    case Method::AltUpwards: return "alt-upwards";
    case Method::Beam: return "beam";
    case Method::Greedy: return "greedy";
    case Method::Random: return "random";
  }
  return "?";
}

std::string display_name(Method m) {
  switch (m) {
    case Method::Argmax: return "Argmax";
    case Method::Upwards: return "Upwards";
    case Method::AltUpwards: return "AltUpwards";
    case Method::Beam: return "Beam";
    case Method::Greedy: return "Greedy";
    case Method::Random: return "Random";
  }
  return "?";
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::Argmax, Method::Upwards, Method::AltUpwards,
                                           Method::Beam,   Method::Greedy,  Method::Random};
  return methods;
}

Method parse_method(const std::string& name) {
  for (Method m : all_methods()) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected argmax|upwards|alt-upwards|beam|greedy|random)");
}

void SamplerConfig::validate() const {
  if (beam_width == 0 || beam_branch == 0 || greedy_parent_samples == 0 ||
      greedy_max_resamples == 0) {
    throw std::invalid_argument("sampler counts must be at least 1");
  }
}

Vertex sample_predecessor(const ParentDistribution& p, Vertex v,
                          std::span<const std::uint8_t> mask, Rng& rng, SamplerStats* stats) {
  const std::size_t n = p.n();
  auto masked = [&](Vertex u) { return !mask.empty() && mask[u] != 0; };
  const auto row = p.row(v);

  double mass = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    if (!masked(u)) mass += row[u];
  }
  if (mass > 0.0) {
    const double target = uniform_unit(rng) * mass;
    double acc = 0.0;
    Vertex last = n;
    for (Vertex u = 0; u < n; ++u) {
      if (masked(u) || row[u] <= 0.0) continue;
      acc += row[u];
      last = u;
      if (target < acc) return u;
    }
    return last;  // rounding left target at the very top of the range
  }

  if (stats) ++stats->random_fallbacks;
  std::vector<Vertex> open;
  for (Vertex u = 0; u < n; ++u) {
    if (!masked(u)) open.push_back(u);
  }
  if (open.empty()) return static_cast<Vertex>(uniform_below(rng, n));
  return open[uniform_below(rng, open.size())];
}

PredecessorArray argmax_extract(const ParentDistribution& p) {
  std::vector<Vertex> parents(p.n());
  for (Vertex v = 0; v < p.n(); ++v) {
    const auto row = p.row(v);
    parents[v] = static_cast<Vertex>(std::max_element(row.begin(), row.end()) - row.begin());
  }
  return PredecessorArray(std::move(parents));
}

namespace {

constexpr Vertex kUnassigned = static_cast<Vertex>(-1);

PredecessorArray upwards_impl(const ParentDistribution& p, Rng& rng, bool remove_processed,
                              SamplerStats* stats) {
  const std::size_t n = p.n();
  // Leafiness: total probability of being someone's parent. Sorted once.
  std::vector<double> parent_mass(n, 0.0);
  for (Vertex child = 0; child < n; ++child) {
    for (Vertex u = 0; u < n; ++u) parent_mass[u] += p(child, u);
  }
  std::vector<Vertex> leaves(n);
  std::iota(leaves.begin(), leaves.end(), Vertex{0});
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](Vertex a, Vertex b) { return parent_mass[a] < parent_mass[b]; });

  std::vector<Vertex> parents(n, kUnassigned);
  std::vector<std::uint8_t> mask(n, 0);
  const std::span<const std::uint8_t> active =
      remove_processed ? std::span<const std::uint8_t>(mask) : std::span<const std::uint8_t>();
  for (Vertex leaf : leaves) {
    Vertex current = leaf;
    while (parents[current] == kUnassigned) {
      parents[current] = sample_predecessor(p, current, active, rng, stats);
      mask[current] = 1;
      current = parents[current];
    }
  }
  return PredecessorArray(std::move(parents));
}

// Lightest edge into v, lowest index on ties.
std::optional<Vertex> lightest_graph_parent(const Graph& g, Vertex v) {
  std::optional<Vertex> best;
  for (Vertex u : g.in_neighbors(v)) {
    if (!best || g.weight_units(u, v) < g.weight_units(*best, v)) best = u;
  }
  return best;
}

struct BeamPath {
  std::vector<Vertex> vertices;  // v, its predecessor, ... , current head
  Cost cost = 0;
};

// Weighted draw of up to k distinct columns with positive mass, skipping
// `excluded` ones.
std::vector<Vertex> sample_distinct(std::span<const double> row, std::size_t k,
                                    const std::vector<std::uint8_t>& excluded, Rng& rng) {
  std::vector<std::uint8_t> taken = excluded;
  std::vector<Vertex> out;
  while (out.size() < k) {
    double mass = 0.0;
    for (Vertex u = 0; u < row.size(); ++u) {
      if (!taken[u] && row[u] > 0.0) mass += row[u];
    }
    if (mass <= 0.0) break;
    const double target = uniform_unit(rng) * mass;
    double acc = 0.0;
    Vertex pick = row.size();
    for (Vertex u = 0; u < row.size(); ++u) {
      if (taken[u] || row[u] <= 0.0) continue;
      acc += row[u];
      pick = u;
      if (target < acc) break;
    }
    taken[pick] = 1;
    out.push_back(pick);
  }
  return out;
}

Vertex beam_one(const ParentDistribution& p, const Graph& g, const SamplerConfig& cfg,
                Vertex target, Vertex source, Rng& rng, SamplerStats* stats) {
  const std::size_t n = g.n();
  std::vector<BeamPath> beam{BeamPath{{target}, 0}};
  std::optional<BeamPath> best;
  std::size_t ties = 0;
  bool self_sampled = false;
  std::vector<std::uint8_t> on_path(n, 0);

  for (std::size_t length = 1; length <= n && !beam.empty(); ++length) {
    std::vector<BeamPath> next;
    for (const BeamPath& path : beam) {
      const Vertex head = path.vertices.back();
      std::fill(on_path.begin(), on_path.end(), 0);
      for (Vertex u : path.vertices) on_path[u] = 1;
      // The target may name itself as parent (an unreachable vertex).
      if (head == target) on_path[target] = 0;
      for (Vertex q : sample_distinct(p.row(head), cfg.beam_branch, on_path, rng)) {
        if (q == head) {
          self_sampled = true;
          continue;
        }
        if (!g.has_edge(q, head)) continue;
        BeamPath extended = path;
        extended.vertices.push_back(q);
        extended.cost += g.weight_units(q, head);
        if (q == source) {
          // Equal-cost completions are chosen uniformly (reservoir of size 1),
          // otherwise the shortest one would always win.
          if (!best || extended.cost < best->cost) {
            best = std::move(extended);
            ties = 1;
          } else if (extended.cost == best->cost && uniform_below(rng, ++ties) == 0) {
            best = std::move(extended);
          }
        } else {
          next.push_back(std::move(extended));
        }
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const BeamPath& a, const BeamPath& b) { return a.cost < b.cost; });
    if (next.size() > cfg.beam_width) next.resize(cfg.beam_width);
    beam = std::move(next);
  }

  if (best) return best->vertices[1];
  if (self_sampled) return target;
  if (auto parent = lightest_graph_parent(g, target)) {
    if (stats) ++stats->graph_fallbacks;
    return *parent;
  }
  if (stats) ++stats->random_fallbacks;
  return static_cast<Vertex>(uniform_below(rng, n));
}

}  // namespace

PredecessorArray upwards_sample(const ParentDistribution& p, Rng& rng, SamplerStats* stats) {
  return upwards_impl(p, rng, true, stats);
}

PredecessorArray alt_upwards_sample(const ParentDistribution& p, Rng& rng, SamplerStats* stats) {
  return upwards_impl(p, rng, false, stats);
}

PredecessorArray beam_extract(const ParentDistribution& p, const Graph& g,
                              const SamplerConfig& cfg, Rng& rng, SamplerStats* stats) {
  cfg.validate();
  const Vertex source = g.require_source();
  if (p.n() != g.n()) throw std::invalid_argument("distribution and graph sizes differ");
  std::vector<Vertex> parents(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    parents[v] = v == source ? source : beam_one(p, g, cfg, v, source, rng, stats);
  }
  return PredecessorArray(std::move(parents));
}

PredecessorArray greedy_extract(const ParentDistribution& p, const Graph& g,
                                const SamplerConfig& cfg, Rng& rng, SamplerStats* stats) {
  cfg.validate();
  const Vertex source = g.require_source();
  if (p.n() != g.n()) throw std::invalid_argument("distribution and graph sizes differ");
  std::vector<Vertex> parents(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == source) {
      parents[v] = source;
      continue;
    }
    std::optional<Vertex> choice;
    bool self_sampled = false;
    for (std::size_t round = 0; round <= cfg.greedy_max_resamples && !choice; ++round) {
      for (std::size_t k = 0; k < cfg.greedy_parent_samples; ++k) {
        const Vertex q = sample_predecessor(p, v, {}, rng, stats);
        if (q == v) {
          self_sampled = true;
          continue;
        }
        if (!g.has_edge(q, v)) continue;
        if (!choice || g.weight_units(q, v) < g.weight_units(*choice, v) ||
            (g.weight_units(q, v) == g.weight_units(*choice, v) && q < *choice)) {
          choice = q;
        }
      }
    }
    if (!choice && !self_sampled) {
      choice = lightest_graph_parent(g, v);
      if (choice && stats) ++stats->graph_fallbacks;
    }
    parents[v] = choice.value_or(v);
  }
  return PredecessorArray(std::move(parents));
}

PredecessorArray random_extract(const Graph& g, Rng& rng) {
  const Vertex root = g.source().value_or(0);
  std::vector<Vertex> parents(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    parents[v] = v == root ? root : static_cast<Vertex>(uniform_below(rng, g.n()));
  }
  return PredecessorArray(std::move(parents));
}

PredecessorArray extract(const ParentDistribution& p, const Graph& g, const SamplerConfig& cfg,
                         Rng& rng, SamplerStats* stats) {
  switch (cfg.method) {
    case Method::Argmax: return argmax_extract(p);
    case Method::Upwards: return upwards_sample(p, rng, stats);
    case Method::AltUpwards: return alt_upwards_sample(p, rng, stats);
    case Method::Beam: return beam_extract(p, g, cfg, rng, stats);
    case Method::Greedy: return greedy_extract(p, g, cfg, rng, stats);
    case Method::Random: return random_extract(g, rng);
  }
  throw std::invalid_argument("unknown sampler method");
}

}  // namespace multisol
