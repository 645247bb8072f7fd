#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dmincut/rank.hpp"

namespace dmincut {

// Payloads carry exactly the fields of the corresponding protocol message.
// Each is totally ordered so that a node's per-phase dedup memory can be a
// plain ordered set of payloads.

struct SetRank {
  Rank rank;
  friend auto operator<=>(const SetRank&, const SetRank&) = default;
};

struct FindMaxRank {
  Rank rank;
  friend auto operator<=>(const FindMaxRank&, const FindMaxRank&) = default;
};

/// Flooded by the owner of the max-rank edge when it cannot certify on its
/// own that a third group exists.
struct IsEligibleContract {
  VertexId initiator = 0;
  GroupId initiator_group;
  GroupId other_group;
  friend auto operator<=>(const IsEligibleContract&, const IsEligibleContract&) = default;
};

struct EligibleContract {
  VertexId initiator = 0;
  GroupId initiator_group;
  friend auto operator<=>(const EligibleContract&, const EligibleContract&) = default;
};

struct SetGroupId {
  GroupId first;
  GroupId second;
  GroupId new_group;
  friend auto operator<=>(const SetGroupId&, const SetGroupId&) = default;
};

struct SetWeight {
  friend auto operator<=>(const SetWeight&, const SetWeight&) = default;
};

/// Tells an outside neighbor that the sender now belongs to `group`.
struct GroupUpdate {
  GroupId group;
  friend auto operator<=>(const GroupUpdate&, const GroupUpdate&) = default;
};

struct Stop {
  bool done = true;
  friend auto operator<=>(const Stop&, const Stop&) = default;
};

struct LocalMc {
  Weight partial = 0;
  VertexId source = 0;
  VertexId destination = 0;
  friend auto operator<=>(const LocalMc&, const LocalMc&) = default;
};

struct Mincut {
  VertexId source = 0;
  Weight value = 0;
  friend auto operator<=>(const Mincut&, const Mincut&) = default;
};

using Payload = std::variant<SetRank, FindMaxRank, IsEligibleContract, EligibleContract,
                             SetGroupId, SetWeight, GroupUpdate, Stop, LocalMc, Mincut>;

/// Matches the alternative order of `Payload`.
enum class MessageKind : std::uint8_t {
  set_rank,
  find_max_rank,
  is_eligible_contract,
  eligible_contract,
  set_group_id,
  set_weight,
  group_update,
  stop,
  local_mc,
  mincut,
};

inline constexpr std::size_t kMessageKindCount = std::variant_size_v<Payload>;

std::string_view to_string(MessageKind kind);
std::string payload_to_string(const Payload& payload);

inline MessageKind kind_of(const Payload& payload) {
  return static_cast<MessageKind>(payload.index());
}

struct PhaseTag {
  std::uint32_t trial = 0;
  std::uint32_t iteration = 0;
  std::uint32_t phase = 0;

  friend auto operator<=>(const PhaseTag&, const PhaseTag&) = default;
};

struct Message {
  VertexId from = 0;
  VertexId to = 0;
  GroupId sender_group;
  PhaseTag tag;
  Payload payload;

  MessageKind kind() const { return kind_of(payload); }
};

/// One trace line: "pulse kind src dst payload".
std::string trace_line(std::uint64_t pulse, const Message& msg);

}  // namespace dmincut
