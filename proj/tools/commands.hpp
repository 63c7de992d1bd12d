#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace multisol::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kValidation = 3;
inline constexpr int kIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplerOptions {
  std::size_t beam_width = 3;
  std::size_t beam_branch = 3;
  std::size_t greedy_samples = 5;
  std::size_t greedy_resamples = 10;
};

struct GenOptions {
  std::string task;
  std::size_t n = 0;
  std::size_t count = 1;
  double p = 0.5;
  std::vector<std::int64_t> weights{1, 2, 3};
  bool normalize = true;
  std::uint64_t seed = 0;
  std::string output;
};

struct DistOptions {
  std::string input;
  std::string task;  // empty: inferred from the graphs (source => bf)
  std::size_t runs = 20;
  double perturb = -1.0;  // negative: no perturbation
  std::string tiebreak = "global";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string output;
};

struct SampleOptions {
  std::string graphs;
  std::string dists;
  std::string task;
  std::string method;
  std::size_t k = 5;
  SamplerOptions sampler;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string output;
};

struct CheckOptions {
  std::string graphs;
  std::string solutions;
  std::string task;
  std::size_t graph_index = 0;
  std::string output;  // empty: stdout
};

struct StudyOptions {
  std::string kind;  // reruns|coverage|edge-reuse|table1|table2
  std::string task = "bf";
  std::size_t n = 5;
  std::size_t graphs = 0;   // 0: 50 for tables, 10 for coverage/edge-reuse
  std::size_t samples = 0;  // 0: 5 for tables, 25 for coverage/edge-reuse
  std::size_t runs = 5;
  std::string dist = "empirical";
  double alpha = 0.0;
  std::size_t dist_runs = 20;
  std::string tiebreak = "global";
  std::vector<std::string> methods;  // empty: all four (tables) or the two samplers
  double p = 0.5;
  std::vector<std::int64_t> weights{1, 2, 3};
  bool normalize = true;
  SamplerOptions sampler;
  std::string reuse_denominator = "union";
  std::vector<std::size_t> sizes;  // empty: 5..64
  std::size_t graphs_per_size = 100;
  std::vector<std::size_t> counts{20, 50, 100};
  std::string graph_file;
  std::string dist_file;
  bool end_to_end = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string output;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SamplerOptions, beam_width, beam_branch,
                                                greedy_samples, greedy_resamples)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GenOptions, task, n, count, p, weights, normalize,
                                                seed, output)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DistOptions, input, task, runs, perturb, tiebreak,
                                                seed, jobs, output)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SampleOptions, graphs, dists, task, method, k,
                                                sampler, seed, jobs, output)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(StudyOptions, kind, task, n, graphs, samples, runs,
                                                dist, alpha, dist_runs, tiebreak, methods, p,
                                                weights, normalize, sampler, reuse_denominator,
                                                sizes, graphs_per_size, counts, graph_file,
                                                dist_file, end_to_end, seed, jobs, output)

/// Fills kind-dependent defaults (graph and sample counts, method list).
void resolve_defaults(StudyOptions& o);

int run_gen(const GenOptions& o);
int run_dist(const DistOptions& o);
int run_sample(const SampleOptions& o);
int run_check(const CheckOptions& o);
int run_study(StudyOptions o);

/// Re-executes a manifest, optionally redirecting output and thread count.
int run_replay(const std::string& manifest, const std::string& output_override,
               std::size_t jobs_override);

}  // namespace multisol::cli
