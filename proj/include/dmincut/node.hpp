#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dmincut/graph.hpp"
#include "dmincut/message.hpp"
#include "dmincut/rank.hpp"

namespace dmincut {

/// Raised when a node or the engine observes a state the protocol can never
/// legitimately reach (odd doubled cut, message on a non-edge, ...).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status : std::uint8_t { active, inactive };

enum class PhaseKind : std::uint8_t {
  assign_rank,
  local_maxrank,
  global_maxrank,
  contract,
  termination,
  local_mc,
  reduce_mc,
  broadcast_mc,
};

std::string_view to_string(PhaseKind kind);

/// Idle pulses of one synchronize() barrier.
inline std::uint32_t synchronize_pulses(VertexId n) { return n; }

/// Pulses allotted to a phase: one entry pulse plus the barrier that lets
/// its traffic quiesce. Rank assignment is a single hop and local phases
/// send nothing. The contract phase chains up to three floods (eligibility
/// query, reply, group relabel) and gets three barriers.
std::uint32_t phase_length(PhaseKind kind, VertexId n);

struct PhaseContext {
  PhaseKind kind = PhaseKind::assign_rank;
  std::uint32_t pulse = 0;  // 0 is the entry pulse
  VertexId n = 0;
  PhaseTag tag;
  // reduce_mc only: the node that floods its partial sum in this sub-step.
  VertexId reduce_sender = 0;
  VertexId reduce_destination = 0;
};

struct ContractionEvent {
  VertexId owner = 0;    // higher endpoint of the contracted edge
  VertexId partner = 0;  // lower endpoint

  friend bool operator==(const ContractionEvent&, const ContractionEvent&) = default;
};

struct NodeState;

/// Collects what one node emits during one pulse.
class Outbox {
 public:
  explicit Outbox(PhaseTag tag = {}) : tag_(tag) {}

  void send(const NodeState& from, VertexId to, Payload payload);

  std::vector<Message> messages;
  std::optional<ContractionEvent> contraction;

 private:
  PhaseTag tag_;
};

/// Protocol state of one node. The per-neighbor tables are parallel to
/// `neighbors`, which is sorted by id.
struct NodeState {
  VertexId id = 0;
  std::vector<VertexId> neighbors;

  GroupId group;
  std::vector<Weight> weight;  // 0 means the edge lies inside this node's group
  std::vector<Rank> rank;
  std::vector<GroupId> neighbor_group;
  Rank maxrank;
  Status status = Status::active;
  bool stop = true;
  std::set<Payload> seen;  // per-phase flood dedup
  Weight mc = 0;

  /// Table index of neighbor `v`; throws ProtocolError if `v` is not adjacent.
  std::size_t slot(VertexId v) const;

  Weight weight_to(VertexId v) const { return weight[slot(v)]; }
  const Rank& rank_to(VertexId v) const { return rank[slot(v)]; }
  const GroupId& group_of(VertexId v) const { return neighbor_group[slot(v)]; }

  /// Neighbors joined by a non-zero edge, i.e. this node's incident cut edges
  /// once only two groups remain.
  std::vector<VertexId> live_neighbors() const;
};

/// Returns a node of `g` in its initial trial state.
NodeState make_node(const Graph& g, VertexId id);

/// Resets to the start-of-trial state: own group, original weights, ACTIVE.
void init_trial(NodeState& state, const Graph& g);

/// Yields rank values in 1..m^k; returning 0 signals an exhausted source.
using RankSource = std::function<std::uint64_t()>;

// Operations of one iteration, in schedule order. Each mutates only the
// given node and reports traffic through the outbox; `delivered` holds the
// messages that arrived this pulse, in delivery order.

void assign_rank(NodeState& state, const RankSource& draw, Outbox& out);
void find_local_maxrank(NodeState& state);
void flood_global_maxrank(NodeState& state, std::span<const Message> delivered,
                          const PhaseContext& ctx, Outbox& out);
void check_eligibility_and_contract(NodeState& state, std::span<const Message> delivered,
                                    const PhaseContext& ctx, Outbox& out);
/// Owner side of a contraction. A no-op unless this node owns the max edge.
void contract_as_owner(NodeState& state, Outbox& out);
/// Handles SET-GROUP-ID, SET-WEIGHT and GROUP-UPDATE receipts.
void contract(NodeState& state, std::span<const Message> delivered, Outbox& out);
void check_termination_status(NodeState& state, std::span<const Message> delivered,
                              const PhaseContext& ctx, Outbox& out);
void find_local_mincut(NodeState& state);
void reduce_global_mincut(NodeState& state, std::span<const Message> delivered,
                          const PhaseContext& ctx, Outbox& out);
void broadcast_mincut(NodeState& state, std::span<const Message> delivered,
                      const PhaseContext& ctx, Outbox& out);

/// The node's step function: runs whatever `ctx.kind` prescribes for this
/// pulse. Clears the dedup memory on entry pulses.
void step(NodeState& state, std::span<const Message> delivered, const PhaseContext& ctx,
          const RankSource& draw, Outbox& out);

/// Argmax of the node's rank table, or nullopt when every incident edge is
/// contracted.
std::optional<std::size_t> local_max_slot(const NodeState& state);

/// True if this node is the higher endpoint of the globally maximal edge.
bool owns_max_edge(const NodeState& state);

}  // namespace dmincut
