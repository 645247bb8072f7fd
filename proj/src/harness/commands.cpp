#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dmincut/generators.hpp"
#include "dmincut/harness.hpp"
#include "dmincut/stats.hpp"

namespace dmincut {

OracleChoice parse_oracle_choice(std::string_view text) {
  if (text == "brute") return OracleChoice::brute;
  if (text == "sw" || text == "stoer-wagner") return OracleChoice::stoer_wagner;
  if (text == "auto") return OracleChoice::automatic;
  throw ConfigError("unknown oracle '" + std::string(text) + "' (brute, sw, auto)");
}

EmitFormat parse_emit_format(std::string_view text) {
  if (text == "json") return EmitFormat::json;
  if (text == "text") return EmitFormat::text;
  if (text == "csv") return EmitFormat::csv;
  throw ConfigError("unknown output format '" + std::string(text) + "' (json, text, csv)");
}

Command parse_command(std::string_view text) {
  if (text == "run") return Command::run;
  if (text == "verify") return Command::verify;
  if (text == "stats") return Command::stats;
  if (text == "complexity") return Command::complexity;
  throw ConfigError("unknown command '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
  if (graph_file.has_value() == generator.has_value()) {
    throw ConfigError("exactly one of --graph and --gen is required");
  }
  if (k < 5) throw ConfigError("k must be at least 5, got " + std::to_string(k));
  if (trials && *trials == 0) throw ConfigError("trials must be at least 1");
  if (pulse_budget_constant == 0) throw ConfigError("pulse budget constant must be positive");
  if (threads == 0) throw ConfigError("threads must be at least 1");
  if (graphs == 0) throw ConfigError("graphs must be at least 1");
  if (sizes.empty()) throw ConfigError("size sweep is empty");
  for (VertexId n : sizes) {
    if (n < 2) throw ConfigError("sweep sizes must be at least 2");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (generator) {
    try {
      parse_generator_spec(*generator);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
}

EngineOptions ExperimentConfig::engine_options() const {
  EngineOptions o;
  o.k = k;
  o.pulse_budget_constant = pulse_budget_constant;
  o.threads = threads;
  return o;
}

Graph load_config_graph(const ExperimentConfig& config, std::uint32_t index) {
  if (config.graph_file) {
    try {
      return load_edge_list(*config.graph_file);
    } catch (const GraphError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (!config.generator) throw ConfigError("no graph source");
  GeneratorSpec spec;
  try {
    spec = parse_generator_spec(*config.generator);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  try {
    return generate(spec, config.seed + index);
  } catch (const GraphError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string describe_source(const ExperimentConfig& config) {
  if (config.graph_file) return "file:" + *config.graph_file;
  if (config.generator) return "gen:" + *config.generator;
  return "";
}

Weight oracle_mincut(const Graph& g, OracleChoice choice) {
  switch (choice) {
    case OracleChoice::brute:
      if (g.n() > kBruteForceMaxVertices) {
        throw ConfigError("brute-force oracle limited to n <= " +
                          std::to_string(kBruteForceMaxVertices));
      }
      return brute_force_mincut(g).value;
    case OracleChoice::stoer_wagner:
      return stoer_wagner_mincut(g);
    case OracleChoice::automatic:
      break;
  }
  return g.n() <= kBruteForceMaxVertices ? brute_force_mincut(g).value : stoer_wagner_mincut(g);
}

std::string oracle_name(const Graph& g, OracleChoice choice) {
  switch (choice) {
    case OracleChoice::brute:
      return "brute";
    case OracleChoice::stoer_wagner:
      return "sw";
    case OracleChoice::automatic:
      break;
  }
  return g.n() <= kBruteForceMaxVertices ? "brute" : "sw";
}

namespace {

std::uint64_t pulse_budget(const Graph& g, std::uint32_t constant) {
  const std::uint64_t n = g.n();
  return constant * n * n;
}

std::map<std::string, std::uint64_t> kind_counts(const TrialMetrics& m) {
  std::map<std::string, std::uint64_t> out;
  for (std::size_t i = 0; i < kMessageKindCount; ++i) {
    if (m.messages_by_kind[i] != 0) {
      out.emplace(std::string(to_string(static_cast<MessageKind>(i))), m.messages_by_kind[i]);
    }
  }
  return out;
}

SequentialTrial replay(const Graph& g, std::uint64_t seed, const CutResult& r, int k) {
  return sequential_karger_trial(
      g, stream_rank_schedule(g, seed, r.metrics.trial_index, r.metrics.attempt, k));
}

std::string compare(const CutResult& r, const SequentialTrial& s) {
  std::ostringstream os;
  if (s.collision) {
    os << "sequential replay hit a rank collision the protocol did not abort on";
    return os.str();
  }
  const std::size_t common = std::min(r.contractions.size(), s.contractions.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& a = r.contractions[i];
    const auto& b = s.contractions[i];
    if (!(a == b)) {
      os << "contraction " << i << ": distributed (" << a.owner << ',' << a.partner
         << ") vs sequential (" << b.owner << ',' << b.partner << ')';
      return os.str();
    }
  }
  if (r.contractions.size() != s.contractions.size()) {
    os << "contraction count: distributed " << r.contractions.size() << " vs sequential "
       << s.contractions.size();
    return os.str();
  }
  if (!(r.sides == s.partition)) return "final bipartitions differ";
  if (r.value != s.value) {
    os << "cut value: distributed " << r.value << " vs sequential " << s.value;
    return os.str();
  }
  return "";
}

constexpr std::uint32_t default_verify_trials = 10;
constexpr std::uint32_t default_stats_trials = 2000;
constexpr std::uint32_t default_complexity_trials = 10;

double geometric_mean(const std::vector<double>& xs) {
  double log_sum = 0;
  for (double x : xs) log_sum += std::log(x);
  return std::exp(log_sum / static_cast<double>(xs.size()));
}

double spread(const std::vector<double>& xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi / *lo;
}

void write_trace(const Graph& g, const ExperimentConfig& config, std::uint32_t trial) {
  std::ofstream trace(*config.trace_path);
  if (!trace) throw InputError("cannot open trace file: " + *config.trace_path);
  EngineOptions options = config.engine_options();
  options.trace = &trace;
  run_trial(g, config.seed, trial, options);
}

}  // namespace

std::string compare_with_sequential(const Graph& g, std::uint64_t seed, const CutResult& r,
                                    int k) {
  return compare(r, replay(g, seed, r, k));
}

RunReport cmd_run(const ExperimentConfig& config) {
  config.validate();
  const Graph g = load_config_graph(config);
  const Weight oracle = oracle_mincut(g, config.oracle);
  const ExperimentResult res =
      run_experiment(g, config.seed, config.trials, config.engine_options(), oracle);

  RunReport r;
  r.source = describe_source(config);
  r.n = g.n();
  r.m = g.m();
  r.seed = config.seed;
  r.k = config.k;
  r.trials = res.summary.trials;
  r.best_value = res.best.value;
  r.best_trial = res.summary.best_trial;
  r.best_contractions = static_cast<std::uint32_t>(res.best.contractions.size());
  r.partition.assign(res.best.sides.side.begin(), res.best.sides.side.end());
  r.cut_edges = res.best.cut_edges;
  r.incident_cut_edges = res.best.incident_cut_edges;
  for (std::size_t i = 0; i < res.trials.size(); ++i) {
    const TrialMetrics& m = res.trials[i];
    r.trial_records.push_back({m.trial_index, res.trial_values[i], m.messages_total, m.pulses,
                               m.contractions, m.iterations, m.attempt, m.doubled_cut,
                               kind_counts(m)});
    for (const auto& c : m.aborts) r.collisions.push_back({c.trial, c.attempt, c.iteration});
  }
  r.mean_messages = res.summary.mean_messages;
  r.max_messages = res.summary.max_messages;
  r.mean_pulses = res.summary.mean_pulses;
  r.max_pulses = res.summary.max_pulses;
  r.pulse_budget = pulse_budget(g, config.pulse_budget_constant);
  r.oracle = oracle_name(g, config.oracle);
  r.oracle_value = oracle;
  r.match = res.summary.match;
  r.success_rate = res.summary.per_trial_success_rate;
  return r;
}

VerifyReport cmd_verify(const ExperimentConfig& config) {
  config.validate();
  VerifyReport rep;
  rep.source = describe_source(config);
  rep.seed = config.seed;
  rep.graphs = config.graph_file ? 1 : config.graphs;
  rep.trials_per_graph = config.trials.value_or(default_verify_trials);
  const EngineOptions options = config.engine_options();

  for (std::uint32_t gi = 0; gi < rep.graphs; ++gi) {
    const Graph g = load_config_graph(config, gi);
    const Weight oracle = oracle_mincut(g, config.oracle);
    for (std::uint32_t t = 0; t < rep.trials_per_graph; ++t) {
      const CutResult r = run_trial(g, config.seed, t, options);
      const SequentialTrial s = replay(g, config.seed, r, config.k);
      VerifyCase c;
      c.graph_index = gi;
      c.n = g.n();
      c.m = g.m();
      c.trial = t;
      c.distributed_value = r.value;
      c.sequential_value = s.value;
      c.oracle_value = oracle;
      c.divergence = compare(r, s);
      c.equivalent = c.divergence.empty();
      c.above_oracle = r.value >= oracle;
      if (!c.above_oracle && c.divergence.empty()) {
        c.divergence = "value below oracle";
      }
      rep.mismatches += c.equivalent ? 0 : 1;
      rep.below_oracle += c.above_oracle ? 0 : 1;
      rep.cases.push_back(std::move(c));
    }
  }
  rep.passed = rep.mismatches == 0 && rep.below_oracle == 0;
  return rep;
}

StatsReport cmd_stats(const ExperimentConfig& config) {
  config.validate();
  StatsReport rep;
  rep.source = describe_source(config);
  rep.seed = config.seed;
  rep.alpha = config.alpha;
  const std::uint32_t graphs = config.graph_file ? 1 : config.graphs;
  const std::uint32_t trials = config.trials.value_or(default_stats_trials);
  const EngineOptions options = config.engine_options();

  for (std::uint32_t gi = 0; gi < graphs; ++gi) {
    const Graph g = load_config_graph(config, gi);
    StatsRow row;
    row.graph_index = gi;
    row.n = g.n();
    row.m = g.m();
    row.oracle_value = oracle_mincut(g, config.oracle);
    const ExperimentResult single =
        run_experiment(g, config.seed, trials, options, row.oracle_value);
    row.trials = trials;
    row.successes = single.summary.successes;
    row.success_rate = static_cast<double>(row.successes) / trials;
    row.bound = stats::karger_success_bound(g.n());
    row.p_value = stats::binomial_lower_tail_p_value(row.successes, trials, row.bound);
    row.passed = row.p_value >= config.alpha;
    row.max_pulses = single.summary.max_pulses;
    row.collision_aborts = single.summary.collision_aborts;

    row.repetitions = config.repetitions;
    row.experiment_trials = default_trial_count(g.n());
    for (std::uint32_t rep_i = 0; rep_i < config.repetitions; ++rep_i) {
      // Full experiments use seeds disjoint from the single-trial run.
      const std::uint64_t seed = config.seed + 1 + rep_i;
      const ExperimentResult full =
          run_experiment(g, seed, std::nullopt, options, row.oracle_value);
      if (full.summary.match.value_or(false)) ++row.experiment_successes;
      row.max_pulses = std::max(row.max_pulses, full.summary.max_pulses);
      row.collision_aborts += full.summary.collision_aborts;
    }
    rep.passed = rep.passed && row.passed;
    rep.rows.push_back(row);
  }
  return rep;
}

ComplexityReport cmd_complexity(const ExperimentConfig& config) {
  config.validate();
  if (!config.generator) throw ConfigError("complexity needs a generator (--gen)");
  GeneratorSpec spec = parse_generator_spec(*config.generator);
  ComplexityReport rep;
  rep.family = std::string(to_string(spec.family));
  rep.seed = config.seed;
  const std::uint32_t trials = config.trials.value_or(default_complexity_trials);
  const EngineOptions options = config.engine_options();

  std::vector<double> msg_ratios, pulse_ratios;
  for (VertexId n : config.sizes) {
    spec.params.n = n;
    if (spec.family == Family::planted_cut) {
      spec.params.block_a = n / 2;
      spec.params.block_b = n - n / 2;
    }
    Graph g;
    try {
      g = generate(spec, config.seed);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const ExperimentResult res = run_experiment(g, config.seed, trials, options);
    ComplexityRow row;
    row.n = g.n();
    row.m = g.m();
    row.trials = trials;
    row.mean_messages = res.summary.mean_messages;
    row.max_messages = res.summary.max_messages;
    row.mean_pulses = res.summary.mean_pulses;
    row.max_pulses = res.summary.max_pulses;
    const double nn = static_cast<double>(n) * n;
    row.message_ratio = row.mean_messages / (static_cast<double>(g.m()) * nn);
    row.pulse_ratio = row.mean_pulses / nn;
    row.collision_aborts = res.summary.collision_aborts;
    if (row.max_pulses > pulse_budget(g, config.pulse_budget_constant)) rep.within_budget = false;
    msg_ratios.push_back(row.message_ratio);
    pulse_ratios.push_back(row.pulse_ratio);
    rep.rows.push_back(row);
  }
  rep.message_constant = geometric_mean(msg_ratios);
  rep.pulse_constant = geometric_mean(pulse_ratios);
  rep.message_spread = spread(msg_ratios);
  rep.pulse_spread = spread(pulse_ratios);
  return rep;
}

int execute(Command command, const ExperimentConfig& config, std::ostream& out,
            std::ostream& err) {
  try {
    config.validate();
    std::string text;
    int code = exit_ok;
    std::uint32_t trace_trial = 0;
    switch (command) {
      case Command::run: {
        const RunReport r = cmd_run(config);
        text = render(r, config.emit);
        trace_trial = r.best_trial;
        break;
      }
      case Command::verify: {
        const VerifyReport r = cmd_verify(config);
        text = render(r, config.emit);
        if (!r.passed) code = exit_check_failed;
        break;
      }
      case Command::stats: {
        const StatsReport r = cmd_stats(config);
        text = render(r, config.emit);
        if (!r.passed) code = exit_check_failed;
        break;
      }
      case Command::complexity: {
        const ComplexityReport r = cmd_complexity(config);
        text = render(r, config.emit);
        if (!r.within_budget) code = exit_check_failed;
        break;
      }
    }
    if (config.out_path) {
      std::ofstream f(*config.out_path, std::ios::binary);
      if (!f) throw InputError("cannot open output file: " + *config.out_path);
      f << text;
    } else {
      out << text;
    }
    if (config.trace_path && command != Command::complexity) {
      write_trace(load_config_graph(config), config, trace_trial);
    }
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const PulseBudgetExceeded& e) {
    err << "pulse budget exceeded: " << e.what() << '\n';
    return exit_protocol_error;
  } catch (const ProtocolError& e) {
    err << "protocol error: " << e.what() << '\n';
    return exit_protocol_error;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_protocol_error;
  }
}

}  // namespace dmincut
