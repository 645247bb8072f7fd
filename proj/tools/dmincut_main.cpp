// dmincut: run, verify, and measure the distributed contraction protocol.

#include <iostream>

#include "CLI11.hpp"
#include "dmincut/harness.hpp"

int main(int argc, char** argv) {
  using namespace dmincut;

  CLI::App app{"Distributed randomized min-cut simulator"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string graph_file, generator, oracle = "auto", emit = "json", out_path, trace_path;
  std::uint32_t trials = 0;
  std::vector<VertexId> sizes;

  auto add_common = [&](CLI::App* sub) {
    auto* g = sub->add_option("--graph", graph_file, "edge-list file");
    auto* gen = sub->add_option("--gen", generator, "FAMILY:PARAMS, e.g. cycle:n=8");
    g->excludes(gen);
    sub->add_option("--seed", config.seed, "experiment seed");
    sub->add_option("--trials", trials, "trial count (run: default ceil(n^2 ln n))");
    sub->add_option("--k", config.k, "rank range exponent, ranks in 1..m^k (>= 5)");
    sub->add_option("--pulse-budget-const", config.pulse_budget_constant,
                    "pulse budget is C * n^2");
    sub->add_option("--oracle", oracle, "brute, sw or auto")
        ->check(CLI::IsMember({"brute", "sw", "auto"}));
    sub->add_option("--emit", emit, "json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--trace", trace_path, "message trace of the best (or first) trial");
    sub->add_option("--threads", config.threads, "worker threads for trials");
  };

  auto* run = app.add_subcommand("run", "run a full experiment and report the best cut");
  auto* verify = app.add_subcommand("verify", "check trials against the sequential replay");
  auto* stats = app.add_subcommand("stats", "estimate the per-trial success rate");
  auto* complexity = app.add_subcommand("complexity", "message and pulse counts over a sweep");
  for (auto* sub : {run, verify, stats, complexity}) add_common(sub);
  for (auto* sub : {verify, stats}) {
    sub->add_option("--graphs", config.graphs, "number of generated graphs (seed, seed+1, ...)");
  }
  stats->add_option("--repetitions", config.repetitions, "full experiments to repeat per graph");
  stats->add_option("--alpha", config.alpha, "significance of the binomial test");
  complexity->add_option("--sizes", sizes, "vertex counts to sweep")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_config_error;
  }

  if (!graph_file.empty()) config.graph_file = graph_file;
  if (!generator.empty()) config.generator = generator;
  if (trials != 0) config.trials = trials;
  if (!out_path.empty()) config.out_path = out_path;
  if (!trace_path.empty()) config.trace_path = trace_path;
  if (!sizes.empty()) config.sizes = sizes;

  Command command = Command::run;
  if (*verify) command = Command::verify;
  if (*stats) command = Command::stats;
  if (*complexity) command = Command::complexity;

  try {
    config.oracle = parse_oracle_choice(oracle);
    config.emit = parse_emit_format(emit);
    if (auto* t = app.get_subcommands().front()->get_option("--trials"); t->count() && trials == 0) {
      throw ConfigError("trials must be at least 1");
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config_error;
  }
  return execute(command, config, std::cout, std::cerr);
}
