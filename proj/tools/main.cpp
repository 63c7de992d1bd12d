// multisol: generate graphs, build parent distributions, sample and check
// candidate solutions, and run the evaluation studies.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "multisol/io.hpp"

using namespace multisol::cli;

namespace {

const std::vector<std::string> kMethods{"argmax", "upwards", "alt-upwards",
                                        "beam",   "greedy",  "random"};

void add_sampler_flags(CLI::App* cmd, SamplerOptions& o) {
  cmd->add_option("--beam-width", o.beam_width, "Paths kept per beam step")->capture_default_str();
  cmd->add_option("--beam-branch", o.beam_branch, "Candidates sampled per path and step")
      ->capture_default_str();
  cmd->add_option("--greedy-samples", o.greedy_samples, "Parents drawn per vertex by greedy")
      ->capture_default_str();
  cmd->add_option("--greedy-resamples", o.greedy_resamples, "Greedy resampling rounds")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple-solution extraction and evaluation for DFS and Bellman-Ford"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MULTISOL_VERSION));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random graphs");
  gen_cmd->add_option("--task", gen.task, "dfs|bf")->required()->check(CLI::IsMember({"dfs", "bf"}));
  gen_cmd->add_option("--n", gen.n, "Vertices per graph")->required();
  gen_cmd->add_option("--count", gen.count, "Number of graphs")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--weights", gen.weights, "Weight set")->delimiter(',')->capture_default_str();
  gen_cmd->add_flag("!--no-normalize", gen.normalize, "Keep raw integer weights");
  gen_cmd->add_option("--seed", gen.seed, "Master seed")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output JSON")->required();

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Build empirical parent distributions");
  dist_cmd->add_option("-i,--input", dist.input, "Graph JSON")->required();
  dist_cmd->add_option("--task", dist.task, "dfs|bf (default: bf iff graphs have a source)")
      ->check(CLI::IsMember({"dfs", "bf"}));
  dist_cmd->add_option("--runs", dist.runs, "Algorithm reruns per graph")->capture_default_str();
  dist_cmd->add_option("--perturb", dist.perturb, "Mix rows with Dirichlet noise (alpha in [0,1])");
  dist_cmd->add_option("--tiebreak", dist.tiebreak, "global|per-node (DFS)")
      ->check(CLI::IsMember({"global", "per-node"}))
      ->capture_default_str();
  dist_cmd->add_option("--seed", dist.seed, "Master seed")->required();
  dist_cmd->add_option("--jobs", dist.jobs, "Worker threads")->capture_default_str();
  dist_cmd->add_option("-o,--output", dist.output, "Output JSON")->required();

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Extract candidate solutions");
  sample_cmd->add_option("--graphs", sample.graphs, "Graph JSON")->required();
  sample_cmd->add_option("--dists", sample.dists, "Distribution JSON")->required();
  sample_cmd->add_option("--task", sample.task, "dfs|bf")->check(CLI::IsMember({"dfs", "bf"}));
  sample_cmd->add_option("--method", sample.method, "argmax|upwards|alt-upwards|beam|greedy|random")
      ->required()
      ->check(CLI::IsMember(kMethods));
  sample_cmd->add_option("--k", sample.k, "Samples per graph")->capture_default_str();
  add_sampler_flags(sample_cmd, sample.sampler);
  sample_cmd->add_option("--seed", sample.seed, "Master seed")->required();
  sample_cmd->add_option("--jobs", sample.jobs, "Worker threads")->capture_default_str();
  sample_cmd->add_option("-o,--output", sample.output, "Output JSON")->required();

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Validate candidate solutions");
  check_cmd->add_option("--graphs", check.graphs, "Graph JSON")->required();
  check_cmd->add_option("--solutions", check.solutions, "Solutions JSON")->required();
  check_cmd->add_option("--task", check.task, "dfs|bf")->check(CLI::IsMember({"dfs", "bf"}));
  check_cmd->add_option("--graph-index", check.graph_index,
                        "Graph for bare predecessor arrays")->capture_default_str();
  check_cmd->add_option("-o,--output", check.output, "Write verdict lines here instead of stdout");

  StudyOptions study;
  auto* study_cmd = app.add_subcommand("study", "Run an evaluation study, writing CSV");
  study_cmd->add_option("kind", study.kind, "reruns|coverage|edge-reuse|table1|table2")
      ->required()
      ->check(CLI::IsMember({"reruns", "coverage", "edge-reuse", "table1", "table2"}));
  study_cmd->add_option("--task", study.task, "dfs|bf")
      ->check(CLI::IsMember({"dfs", "bf"}))
      ->capture_default_str();
  study_cmd->add_option("--n", study.n, "Vertices per graph")->capture_default_str();
  study_cmd->add_option("--graphs", study.graphs, "Graphs per run (default 50, coverage 10)");
  study_cmd->add_option("--samples", study.samples, "Samples per graph (default 5, coverage 25)");
  study_cmd->add_option("--runs", study.runs, "Evaluation runs")->capture_default_str();
  study_cmd->add_option("--dist", study.dist, "empirical|perturbed")
      ->check(CLI::IsMember({"empirical", "perturbed"}))
      ->capture_default_str();
  study_cmd->add_option("--alpha", study.alpha, "Perturbation strength")->capture_default_str();
  study_cmd->add_option("--dist-runs", study.dist_runs, "Reruns behind each distribution")
      ->capture_default_str();
  study_cmd->add_option("--tiebreak", study.tiebreak, "global|per-node")
      ->check(CLI::IsMember({"global", "per-node"}))
      ->capture_default_str();
  study_cmd->add_option("--methods", study.methods, "Sampler methods (default: all for tables, beam+greedy or both upwards variants otherwise)")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethods));
  study_cmd->add_option("--p", study.p, "Edge probability")->capture_default_str();
  study_cmd->add_option("--weights", study.weights, "Weight set")->delimiter(',');
  study_cmd->add_flag("!--no-normalize", study.normalize, "Keep raw integer weights");
  add_sampler_flags(study_cmd, study.sampler);
  study_cmd->add_option("--reuse-denominator", study.reuse_denominator, "union|first")
      ->check(CLI::IsMember({"union", "first"}))
      ->capture_default_str();
  study_cmd->add_option("--sizes", study.sizes, "Graph sizes (reruns; default 5..64)")
      ->delimiter(',');
  study_cmd->add_option("--graphs-per-size", study.graphs_per_size, "Graphs per size (reruns)")
      ->capture_default_str();
  study_cmd->add_option("--counts", study.counts, "Rerun counts (reruns)")->delimiter(',');
  study_cmd->add_option("--graph-file", study.graph_file, "Use these graphs instead of generating");
  study_cmd->add_option("--dist-file", study.dist_file, "Use these distributions (needs --graph-file)");
  study_cmd->add_flag("--end-to-end", study.end_to_end, "Generate everything in memory (default)");
  study_cmd->add_option("--seed", study.seed, "Master seed")->required();
  study_cmd->add_option("--jobs", study.jobs, "Worker threads")->capture_default_str();
  study_cmd->add_option("-o,--output", study.output, "Output CSV")->required();

  std::string manifest;
  std::string replay_output;
  std::size_t replay_jobs = 0;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", manifest, "Manifest JSON")->required();
  replay_cmd->add_option("-o,--output", replay_output, "Write to a different output");
  replay_cmd->add_option("--jobs", replay_jobs, "Override worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*dist_cmd) return run_dist(dist);
    if (*sample_cmd) return run_sample(sample);
    if (*check_cmd) return run_check(check);
    if (*study_cmd) return run_study(study);
    if (*replay_cmd) return run_replay(manifest, replay_output, replay_jobs);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const multisol::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
