#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmincut/engine.hpp"
#include "dmincut/graph.hpp"

namespace dmincut {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unreadable or malformed graph input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OracleChoice { brute, stoer_wagner, automatic };
enum class EmitFormat { json, text, csv };
enum class Command { run, verify, stats, complexity };

OracleChoice parse_oracle_choice(std::string_view text);
EmitFormat parse_emit_format(std::string_view text);
Command parse_command(std::string_view text);

/// Process exit codes of the CLI.
enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,  // verify mismatch or failed statistical check
  exit_config_error = 2,
  exit_input_error = 3,  // unreadable or invalid graph
  exit_protocol_error = 4,  // protocol corruption or pulse budget exceeded
};

struct ExperimentConfig {
  std::optional<std::string> graph_file;
  std::optional<std::string> generator;  // "FAMILY:PARAMS"
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> trials;
  int k = 5;
  std::uint32_t pulse_budget_constant = 20;
  OracleChoice oracle = OracleChoice::automatic;
  EmitFormat emit = EmitFormat::json;
  std::optional<std::string> out_path;
  std::optional<std::string> trace_path;
  unsigned threads = 1;
  std::uint32_t graphs = 1;       // generated graphs for verify/stats, seeds seed, seed+1, ...
  std::uint32_t repetitions = 0;  // stats: full-budget experiments to repeat
  std::vector<VertexId> sizes{8, 16, 32};  // complexity sweep
  double alpha = 0.01;

  /// Throws ConfigError on k < 5, trials == 0, missing or double graph source, ...
  void validate() const;
  EngineOptions engine_options() const;
};

/// The config's graph for index `i` (file graphs ignore `i`; generated
/// graphs use seed + i).
Graph load_config_graph(const ExperimentConfig& config, std::uint32_t index = 0);
std::string describe_source(const ExperimentConfig& config);

/// Exact min cut by the chosen oracle; `automatic` picks brute force for
/// n <= 16 and Stoer-Wagner above.
Weight oracle_mincut(const Graph& g, OracleChoice choice);
std::string oracle_name(const Graph& g, OracleChoice choice);

struct TrialRecord {
  std::uint32_t trial = 0;
  Weight value = 0;
  std::uint64_t messages = 0;
  std::uint64_t pulses = 0;
  std::uint32_t contractions = 0;
  std::uint32_t iterations = 0;
  std::uint32_t attempt = 0;
  Weight doubled_cut = 0;  // accumulator at node n before halving
  std::map<std::string, std::uint64_t> messages_by_kind;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct CollisionLogEntry {
  std::uint32_t trial = 0;
  std::uint32_t attempt = 0;
  std::uint32_t iteration = 0;

  friend bool operator==(const CollisionLogEntry&, const CollisionLogEntry&) = default;
};

struct RunReport {
  std::string source;
  VertexId n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  int k = 5;
  std::uint32_t trials = 0;
  Weight best_value = 0;
  std::uint32_t best_trial = 0;
  std::uint32_t best_contractions = 0;
  std::vector<int> partition;  // side of each vertex, vertex 1 on side 0
  std::vector<Edge> cut_edges;
  std::vector<std::vector<VertexId>> incident_cut_edges;  // index v - 1
  std::vector<TrialRecord> trial_records;
  double mean_messages = 0;
  std::uint64_t max_messages = 0;
  double mean_pulses = 0;
  std::uint64_t max_pulses = 0;
  std::uint64_t pulse_budget = 0;
  std::vector<CollisionLogEntry> collisions;
  std::string oracle;
  std::optional<Weight> oracle_value;
  std::optional<bool> match;
  std::optional<double> success_rate;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct VerifyCase {
  std::uint32_t graph_index = 0;
  VertexId n = 0;
  std::uint64_t m = 0;
  std::uint32_t trial = 0;
  Weight distributed_value = 0;
  Weight sequential_value = 0;
  Weight oracle_value = 0;
  bool equivalent = true;
  bool above_oracle = true;
  std::string divergence;  // empty when equivalent

  friend bool operator==(const VerifyCase&, const VerifyCase&) = default;
};

struct VerifyReport {
  std::string source;
  std::uint64_t seed = 0;
  std::uint32_t graphs = 0;
  std::uint32_t trials_per_graph = 0;
  std::vector<VerifyCase> cases;
  std::uint32_t mismatches = 0;
  std::uint32_t below_oracle = 0;
  bool passed = true;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct StatsRow {
  std::uint32_t graph_index = 0;
  VertexId n = 0;
  std::uint64_t m = 0;
  Weight oracle_value = 0;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  double success_rate = 0;
  double bound = 0;
  double p_value = 1;
  bool passed = true;
  std::uint32_t repetitions = 0;
  std::uint32_t experiment_trials = 0;
  std::uint32_t experiment_successes = 0;
  std::uint64_t max_pulses = 0;  // over single trials and repetitions
  std::uint64_t collision_aborts = 0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

struct StatsReport {
  std::string source;
  std::uint64_t seed = 0;
  double alpha = 0.01;
  std::vector<StatsRow> rows;
  bool passed = true;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

struct ComplexityRow {
  VertexId n = 0;
  std::uint64_t m = 0;
  std::uint32_t trials = 0;
  double mean_messages = 0;
  std::uint64_t max_messages = 0;
  double mean_pulses = 0;
  std::uint64_t max_pulses = 0;
  double message_ratio = 0;  // mean messages / (m n^2)
  double pulse_ratio = 0;    // mean pulses / n^2
  std::uint64_t collision_aborts = 0;

  friend bool operator==(const ComplexityRow&, const ComplexityRow&) = default;
};

struct ComplexityReport {
  std::string family;
  std::uint64_t seed = 0;
  std::vector<ComplexityRow> rows;
  double message_constant = 0;  // geometric mean of the message ratios
  double pulse_constant = 0;    // geometric mean of the pulse ratios
  double message_spread = 0;    // max / min message ratio
  double pulse_spread = 0;      // max / min pulse ratio
  bool within_budget = true;    // every trial used <= budget pulses

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

RunReport cmd_run(const ExperimentConfig& config);
VerifyReport cmd_verify(const ExperimentConfig& config);
StatsReport cmd_stats(const ExperimentConfig& config);
ComplexityReport cmd_complexity(const ExperimentConfig& config);

/// Compares one distributed trial against the sequential replay of the same
/// rank draws. Returns an empty string when contraction sequence, partition
/// and value agree, otherwise a description of the first divergence.
std::string compare_with_sequential(const Graph& g, std::uint64_t seed, const CutResult& r,
                                    int k = 5);

std::string to_json(const RunReport& r);
std::string to_json(const VerifyReport& r);
std::string to_json(const StatsReport& r);
std::string to_json(const ComplexityReport& r);
RunReport run_report_from_json(std::string_view text);
VerifyReport verify_report_from_json(std::string_view text);
StatsReport stats_report_from_json(std::string_view text);
ComplexityReport complexity_report_from_json(std::string_view text);

std::string render(const RunReport& r, EmitFormat format);
std::string render(const VerifyReport& r, EmitFormat format);
std::string render(const StatsReport& r, EmitFormat format);
std::string render(const ComplexityReport& r, EmitFormat format);

/// Runs a command end to end: executes it, renders the report to the out
/// path (or `out`), writes the optional trace, and maps failures to exit
/// codes with a diagnostic on `err`.
int execute(Command command, const ExperimentConfig& config, std::ostream& out,
            std::ostream& err);

}  // namespace dmincut
