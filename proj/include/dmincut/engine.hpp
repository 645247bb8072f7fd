#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "dmincut/graph.hpp"
#include "dmincut/message.hpp"
#include "dmincut/node.hpp"
#include "dmincut/oracles.hpp"

namespace dmincut {

class PulseBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  int k = 5;                                // rank values are drawn from 1..m^k
  std::uint32_t pulse_budget_constant = 20;  // budget is constant * n^2 pulses
  bool check_invariants = true;
  bool shuffle_delivery = false;  // permute each node's deliveries within a pulse
  std::uint64_t shuffle_seed = 0;
  std::uint32_t max_attempts = 64;  // collision redraws allowed per trial
  std::ostream* trace = nullptr;    // "pulse kind src dst payload" lines
  unsigned threads = 1;             // trial-level parallelism in run_experiment
};

struct CollisionRecord {
  std::uint32_t trial = 0;
  std::uint32_t attempt = 0;
  std::uint32_t iteration = 0;
};

struct TrialMetrics {
  std::uint32_t trial_index = 0;
  std::uint64_t messages_total = 0;
  std::array<std::uint64_t, kMessageKindCount> messages_by_kind{};
  std::uint64_t pulses = 0;
  std::uint32_t contractions = 0;
  std::uint32_t iterations = 0;
  bool collision_abort = false;  // some attempt of this trial was aborted
  std::uint32_t attempt = 0;     // attempt that produced the result
  std::vector<CollisionRecord> aborts;
  Weight doubled_cut = 0;  // accumulator at node n before halving
};

struct CutResult {
  Weight value = 0;
  std::vector<GroupId> partition;  // group of vertex v at index v - 1
  Bipartition sides;
  std::vector<Edge> cut_edges;
  std::vector<std::vector<VertexId>> incident_cut_edges;  // per vertex, index v - 1
  std::vector<Weight> reported_values;                    // each node's final mc
  std::vector<ContractionEvent> contractions;
  TrialMetrics metrics;
};

/// Lockstep simulation of the protocol on one graph for one trial attempt.
///
/// A message sent at pulse t is delivered at pulse t + 1. Within a pulse,
/// nodes step in ascending id order and each receives its messages sorted
/// by sender. Phases run a fixed number of pulses; once nothing is in
/// flight the remaining idle pulses are skipped but still counted.
class Network {
 public:
  Network(const Graph& g, std::uint64_t seed, std::uint32_t trial, std::uint32_t attempt,
          const EngineOptions& options);

  void set_iteration(std::uint32_t iteration) { tag_.iteration = iteration; }
  void begin_phase(PhaseKind kind, VertexId reduce_sender = 0, VertexId reduce_destination = 0);
  void run_pulse();
  /// begin_phase plus all of the phase's pulses; throws ProtocolError if
  /// traffic is still in flight when the phase ends.
  void run_phase(PhaseKind kind, VertexId reduce_sender = 0, VertexId reduce_destination = 0);

  /// Runs the partial-sum schedule (LOCAL-MC sub-phases) on the nodes'
  /// current mc values.
  void run_reduction();

  const Graph& graph() const { return graph_; }
  std::uint64_t pulse() const { return pulse_; }
  std::uint64_t pulse_budget() const { return budget_; }
  const PhaseContext& context() const { return ctx_; }
  std::span<const NodeState> nodes() const { return {nodes_.data() + 1, nodes_.size() - 1}; }
  NodeState& node(VertexId v) { return nodes_.at(v); }
  const NodeState& node(VertexId v) const { return nodes_.at(v); }
  std::span<const Message> in_flight() const { return in_flight_; }
  const TrialMetrics& metrics() const { return metrics_; }
  TrialMetrics& metrics() { return metrics_; }

  /// Places a message in flight for delivery at the next pulse.
  void inject(Message msg);
  std::vector<ContractionEvent> take_contractions();

  std::size_t group_count() const;
  /// True if two non-zero edges carry the same rank value.
  bool rank_collision() const;

  // Global-view consistency checks; each throws ProtocolError on failure.
  void check_rank_tables() const;
  void check_maxrank_agreement() const;
  void check_group_coherence() const;

 private:
  const Graph& graph_;
  EngineOptions options_;
  std::vector<NodeState> nodes_;  // index 0 unused
  std::vector<RankStream> streams_;
  std::vector<Message> in_flight_;
  std::vector<ContractionEvent> contractions_;
  PhaseContext ctx_;
  PhaseTag tag_;
  std::uint64_t pulse_ = 0;
  std::uint64_t budget_ = 0;
  std::mt19937_64 shuffle_rng_;
  TrialMetrics metrics_;
};

/// Sub-steps of the doubling reduction as (sender, destination) pairs, in
/// schedule order: in step i = 1..ceil(log2 n) node j = 2^(i-1), 2^(i-1) +
/// 2^i, ... (j <= n - 1) floods its partial sum to min(j + 2^(i-1), n).
std::vector<std::pair<VertexId, VertexId>> reduction_schedule(VertexId n);

/// One full protocol trial. Deterministic in (g, seed, trial_index, options
/// other than threads). Collision-aborted attempts are redrawn.
CutResult run_trial(const Graph& g, std::uint64_t seed, std::uint32_t trial_index,
                    const EngineOptions& options = {});

/// ceil(n^2 ln n), at least 1.
std::uint32_t default_trial_count(VertexId n);

struct ExperimentSummary {
  std::uint32_t trials = 0;
  std::uint32_t best_trial = 0;
  double mean_messages = 0;
  std::uint64_t max_messages = 0;
  double mean_pulses = 0;
  std::uint64_t max_pulses = 0;
  std::uint64_t collision_aborts = 0;
  std::optional<Weight> oracle_value;
  std::optional<bool> match;
  std::uint32_t successes = 0;  // trials whose value equals the oracle value
  std::optional<double> per_trial_success_rate;
};

struct ExperimentResult {
  CutResult best;
  std::vector<Weight> trial_values;
  std::vector<TrialMetrics> trials;
  ExperimentSummary summary;
};

/// Runs `trials` trials (default_trial_count when unset) and keeps the
/// smallest cut, earliest trial on ties.
ExperimentResult run_experiment(const Graph& g, std::uint64_t seed,
                                std::optional<std::uint32_t> trials,
                                const EngineOptions& options = {},
                                std::optional<Weight> oracle_value = std::nullopt);

}  // namespace dmincut
