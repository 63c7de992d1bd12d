#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multisol/distribution.hpp"
#include "multisol/graph.hpp"
#include "multisol/random.hpp"

namespace multisol {

enum class Method { Argmax, Upwards, AltUpwards, Beam, Greedy, Random };

/// CLI spelling: argmax|upwards|alt-upwards|beam|greedy|random.
std::string to_string(Method m);
Method parse_method(const std::string& name);
const std::vector<Method>& all_methods();
/// Display name used in result tables (Argmax, AltUpwards, ...).
std::string display_name(Method m);

struct SamplerConfig {
  Method method = Method::Argmax;
  std::size_t beam_width = 3;
  std::size_t beam_branch = 3;
  std::size_t greedy_parent_samples = 5;
  std::size_t greedy_max_resamples = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Counts how often each sampler had to leave the distribution.
struct SamplerStats {
  std::size_t graph_fallbacks = 0;   // minimum-weight graph parent used
  std::size_t random_fallbacks = 0;  // uniformly random parent used
};

/// Draws a parent for `v` from its row, ignoring columns flagged in `mask`
/// (empty span = nothing masked). Zero remaining mass falls back to a uniform
/// unmasked vertex, or a uniform vertex when everything is masked.
Vertex sample_predecessor(const ParentDistribution& p, Vertex v,
                          std::span<const std::uint8_t> mask, Rng& rng,
                          SamplerStats* stats = nullptr);

/// Most likely parent per row; lowest index wins ties.
PredecessorArray argmax_extract(const ParentDistribution& p);

/// Walks from the leafiest vertices upwards, sampling parents and removing
/// each processed vertex from later parent candidacy.
PredecessorArray upwards_sample(const ParentDistribution& p, Rng& rng,
                                SamplerStats* stats = nullptr);

/// Upwards sampling without removing processed vertices as parent candidates.
PredecessorArray alt_upwards_sample(const ParentDistribution& p, Rng& rng,
                                    SamplerStats* stats = nullptr);

/// Sampled beam search over backward paths v <- ... <- source; pi[v] is the
/// first hop of the cheapest path that reaches the source.
PredecessorArray beam_extract(const ParentDistribution& p, const Graph& g,
                              const SamplerConfig& cfg, Rng& rng,
                              SamplerStats* stats = nullptr);

/// Samples a handful of parents per vertex and keeps the graph-plausible one
/// with the lightest edge into the vertex.
PredecessorArray greedy_extract(const ParentDistribution& p, const Graph& g,
                                const SamplerConfig& cfg, Rng& rng,
                                SamplerStats* stats = nullptr);

/// Uniform parent for every vertex except the source (or 0), which is a root.
PredecessorArray random_extract(const Graph& g, Rng& rng);

/// Dispatches on cfg.method.
PredecessorArray extract(const ParentDistribution& p, const Graph& g, const SamplerConfig& cfg,
                         Rng& rng, SamplerStats* stats = nullptr);

}  // namespace multisol
