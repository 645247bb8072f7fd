#include "dmincut/node.hpp"

#include <algorithm>
#include <sstream>

namespace dmincut {

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::assign_rank: return "ASSIGN-RANK";
    case PhaseKind::local_maxrank: return "LOCAL-MAXRANK";
    case PhaseKind::global_maxrank: return "GLOBAL-MAXRANK";
    case PhaseKind::contract: return "CONTRACT";
    case PhaseKind::termination: return "TERMINATION";
    case PhaseKind::local_mc: return "LOCAL-MC";
    case PhaseKind::reduce_mc: return "REDUCE-MC";
    case PhaseKind::broadcast_mc: return "BROADCAST-MC";
  }
  return "UNKNOWN";
}

std::uint32_t phase_length(PhaseKind kind, VertexId n) {
  switch (kind) {
    case PhaseKind::assign_rank: return 2;
    case PhaseKind::local_maxrank:
    case PhaseKind::local_mc: return 1;
    case PhaseKind::contract: return 1 + 3 * synchronize_pulses(n);
    case PhaseKind::global_maxrank:
    case PhaseKind::termination:
    case PhaseKind::reduce_mc:
    case PhaseKind::broadcast_mc: return 1 + synchronize_pulses(n);
  }
  return 1;
}

void Outbox::send(const NodeState& from, VertexId to, Payload payload) {
  messages.push_back(Message{from.id, to, from.group, tag_, std::move(payload)});
}

std::size_t NodeState::slot(VertexId v) const {
  auto it = std::lower_bound(neighbors.begin(), neighbors.end(), v);
  if (it == neighbors.end() || *it != v) {
    std::ostringstream os;
    os << "node " << id << " has no neighbor " << v;
    throw ProtocolError(os.str());
  }
  return static_cast<std::size_t>(it - neighbors.begin());
}

std::vector<VertexId> NodeState::live_neighbors() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (weight[i] != 0) out.push_back(neighbors[i]);
  }
  return out;
}

NodeState make_node(const Graph& g, VertexId id) {
  NodeState s;
  s.id = id;
  for (const auto& nb : g.neighbors(id)) s.neighbors.push_back(nb.id);
  init_trial(s, g);
  return s;
}

void init_trial(NodeState& s, const Graph& g) {
  const auto nbs = g.neighbors(s.id);
  s.neighbors.clear();
  s.weight.clear();
  s.neighbor_group.clear();
  for (const auto& nb : nbs) {
    s.neighbors.push_back(nb.id);
    s.weight.push_back(nb.weight);
    s.neighbor_group.push_back(GroupId::singleton(nb.id));
  }
  s.rank.assign(nbs.size(), Rank{});
  s.group = GroupId::singleton(s.id);
  s.maxrank = Rank{};
  s.status = Status::active;
  s.stop = true;
  s.seen.clear();
  s.mc = 0;
}

namespace {

void check_active(NodeState& s) {
  if (std::all_of(s.weight.begin(), s.weight.end(), [](Weight w) { return w == 0; })) {
    s.status = Status::inactive;
  }
}

void zero_edge(NodeState& s, std::size_t i) {
  s.weight[i] = 0;
  check_active(s);
}

void send_all(NodeState& s, const Payload& p, Outbox& out, VertexId except = 0) {
  for (VertexId v : s.neighbors) {
    if (v != except) out.send(s, v, p);
  }
}

[[noreturn]] void unexpected(const NodeState& s, const Message& m, const PhaseContext& ctx) {
  std::ostringstream os;
  os << "node " << s.id << " received " << to_string(m.kind()) << " from " << m.from
     << " during " << to_string(ctx.kind);
  throw ProtocolError(os.str());
}

// Every message carries the sender's current group.
void absorb_sender_group(NodeState& s, const Message& m) {
  s.neighbor_group[s.slot(m.from)] = m.sender_group;
}

void on_is_eligible(NodeState& s, const Message& m, const IsEligibleContract& p, Outbox& out) {
  if (!s.seen.insert(p).second) return;
  bool witness = false;
  for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
    if (s.weight[i] != 0 && s.neighbor_group[i] != p.initiator_group &&
        s.neighbor_group[i] != p.other_group) {
      witness = true;
      break;
    }
  }
  if (witness) {
    EligibleContract reply{p.initiator, p.initiator_group};
    s.seen.insert(reply);
    for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
      if (s.weight[i] == 0 || s.neighbor_group[i] == p.initiator_group) {
        out.send(s, s.neighbors[i], reply);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
    if (s.weight[i] == 0 && s.neighbors[i] != m.from) out.send(s, s.neighbors[i], p);
  }
}

void on_eligible(NodeState& s, const Message& m, const EligibleContract& p, Outbox& out) {
  if (!s.seen.insert(p).second) return;
  if (s.id == p.initiator) {
    s.stop = false;
    contract_as_owner(s, out);
    return;
  }
  for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
    if (s.neighbors[i] == m.from) continue;
    if (s.weight[i] == 0 || s.neighbor_group[i] == p.initiator_group) {
      out.send(s, s.neighbors[i], p);
    }
  }
}

void on_set_group_id(NodeState& s, const Message& m, const SetGroupId& p, Outbox& out) {
  if (s.group == p.new_group) return;
  zero_edge(s, s.slot(m.from));
  s.group = p.new_group;
  if (s.status == Status::active) {
    for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
      if (s.weight[i] == 0) continue;
      const auto& g = s.neighbor_group[i];
      if (g == p.first || g == p.second || g == p.new_group) {
        zero_edge(s, i);
        out.send(s, s.neighbors[i], SetWeight{});
      }
    }
  }
  for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
    if (s.weight[i] == 0) {
      out.send(s, s.neighbors[i], p);
    } else {
      out.send(s, s.neighbors[i], GroupUpdate{s.group});
    }
  }
}

void on_set_weight(NodeState& s, const Message& m) { zero_edge(s, s.slot(m.from)); }

void on_group_update(NodeState& s, const Message& m, const GroupUpdate& p, Outbox& out) {
  auto i = s.slot(m.from);
  s.neighbor_group[i] = p.group;
  // The sender joined our group before learning our new id.
  if (p.group == s.group && s.weight[i] != 0) {
    zero_edge(s, i);
    out.send(s, m.from, SetWeight{});
  }
}

void handle_contraction_message(NodeState& s, const Message& m, Outbox& out) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SetGroupId>) {
          on_set_group_id(s, m, p, out);
        } else if constexpr (std::is_same_v<T, SetWeight>) {
          on_set_weight(s, m);
        } else if constexpr (std::is_same_v<T, GroupUpdate>) {
          on_group_update(s, m, p, out);
        } else {
          unexpected(s, m, PhaseContext{PhaseKind::contract});
        }
      },
      m.payload);
}

}  // namespace

std::optional<std::size_t> local_max_slot(const NodeState& s) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < s.rank.size(); ++i) {
    if (s.rank[i].is_null()) continue;
    if (!best || s.rank[*best] < s.rank[i]) best = i;
  }
  return best;
}

bool owns_max_edge(const NodeState& s) {
  auto best = local_max_slot(s);
  return best && !s.maxrank.is_null() && s.maxrank == s.rank[*best] &&
         s.id > s.neighbors[*best];
}

void assign_rank(NodeState& s, const RankSource& draw, Outbox& out) {
  for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
    const VertexId v = s.neighbors[i];
    if (s.id <= v) continue;
    if (s.weight[i] != 0) {
      const std::uint64_t value = draw();
      if (value == 0) throw std::invalid_argument("rank source exhausted");
      s.rank[i] = Rank{value, s.id, v};
    } else {
      s.rank[i] = Rank{};
    }
    out.send(s, v, SetRank{s.rank[i]});
  }
}

void find_local_maxrank(NodeState& s) {
  auto best = local_max_slot(s);
  s.maxrank = best ? s.rank[*best] : Rank{};
}

void flood_global_maxrank(NodeState& s, std::span<const Message> delivered,
                          const PhaseContext& ctx, Outbox& out) {
  if (ctx.pulse == 0) send_all(s, FindMaxRank{s.maxrank}, out);
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    const auto* p = std::get_if<FindMaxRank>(&m.payload);
    if (p == nullptr) unexpected(s, m, ctx);
    if (s.maxrank < p->rank) {
      s.maxrank = p->rank;
      send_all(s, *p, out, m.from);
    }
  }
}

void contract_as_owner(NodeState& s, Outbox& out) {
  if (!owns_max_edge(s)) return;
  const std::size_t i = *local_max_slot(s);
  const VertexId partner = s.neighbors[i];
  const GroupId partner_group = s.neighbor_group[i];
  zero_edge(s, i);
  s.group = GroupId::from_rank(s.maxrank);
  const SetGroupId relabel{s.group, partner_group, GroupId::from_rank(s.maxrank)};
  for (std::size_t j = 0; j < s.neighbors.size(); ++j) {
    if (s.weight[j] == 0) {
      out.send(s, s.neighbors[j], relabel);
    } else {
      out.send(s, s.neighbors[j], GroupUpdate{s.group});
    }
  }
  out.contraction = ContractionEvent{s.id, partner};
}

void check_eligibility_and_contract(NodeState& s, std::span<const Message> delivered,
                                    const PhaseContext& ctx, Outbox& out) {
  if (ctx.pulse == 0) {
    s.stop = true;
    if (owns_max_edge(s)) {
      const std::size_t i = *local_max_slot(s);
      const GroupId partner_group = s.neighbor_group[i];
      bool witness = false;
      for (std::size_t j = 0; j < s.neighbors.size(); ++j) {
        if (j != i && s.weight[j] != 0 && s.neighbor_group[j] != partner_group) {
          witness = true;
          break;
        }
      }
      if (witness) {
        s.stop = false;
        contract_as_owner(s, out);
      } else {
        IsEligibleContract query{s.id, s.group, partner_group};
        s.seen.insert(query);
        send_all(s, query, out);
      }
    }
  }
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    if (const auto* q = std::get_if<IsEligibleContract>(&m.payload)) {
      on_is_eligible(s, m, *q, out);
    } else if (const auto* e = std::get_if<EligibleContract>(&m.payload)) {
      on_eligible(s, m, *e, out);
    } else {
      handle_contraction_message(s, m, out);
    }
  }
}

void contract(NodeState& s, std::span<const Message> delivered, Outbox& out) {
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    handle_contraction_message(s, m, out);
  }
}

void check_termination_status(NodeState& s, std::span<const Message> delivered,
                              const PhaseContext& ctx, Outbox& out) {
  if (ctx.pulse == 0) {
    if (!s.stop) s.seen.insert(Stop{false});
    send_all(s, Stop{s.stop}, out);
  }
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    const auto* p = std::get_if<Stop>(&m.payload);
    if (p == nullptr) unexpected(s, m, ctx);
    if (!p->done && s.seen.insert(*p).second) {
      s.stop = false;
      send_all(s, *p, out);
    }
  }
}

void find_local_mincut(NodeState& s) {
  s.mc = 0;
  if (s.status == Status::active) {
    for (Weight w : s.weight) s.mc += w;
  }
}

void reduce_global_mincut(NodeState& s, std::span<const Message> delivered,
                          const PhaseContext& ctx, Outbox& out) {
  if (ctx.pulse == 0 && s.id == ctx.reduce_sender) {
    LocalMc partial{s.mc, s.id, ctx.reduce_destination};
    s.seen.insert(partial);
    send_all(s, partial, out);
  }
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    const auto* p = std::get_if<LocalMc>(&m.payload);
    if (p == nullptr) unexpected(s, m, ctx);
    if (!s.seen.insert(*p).second) continue;
    if (s.id == p->destination) {
      s.mc += p->partial;
    } else {
      send_all(s, *p, out);
    }
  }
}

void broadcast_mincut(NodeState& s, std::span<const Message> delivered,
                      const PhaseContext& ctx, Outbox& out) {
  if (ctx.pulse == 0 && s.id == ctx.n) {
    if (s.mc % 2 != 0) {
      std::ostringstream os;
      os << "doubled cut accumulator at node " << s.id << " is odd: " << s.mc;
      throw ProtocolError(os.str());
    }
    s.mc /= 2;
    Mincut result{s.id, s.mc};
    s.seen.insert(result);
    send_all(s, result, out);
  }
  for (const auto& m : delivered) {
    absorb_sender_group(s, m);
    const auto* p = std::get_if<Mincut>(&m.payload);
    if (p == nullptr) unexpected(s, m, ctx);
    if (s.seen.insert(*p).second) {
      s.mc = p->value;
      send_all(s, *p, out);
    }
  }
}

void step(NodeState& s, std::span<const Message> delivered, const PhaseContext& ctx,
          const RankSource& draw, Outbox& out) {
  if (ctx.pulse == 0) s.seen.clear();
  switch (ctx.kind) {
    case PhaseKind::assign_rank:
      if (ctx.pulse == 0) assign_rank(s, draw, out);
      for (const auto& m : delivered) {
        absorb_sender_group(s, m);
        const auto* p = std::get_if<SetRank>(&m.payload);
        if (p == nullptr) unexpected(s, m, ctx);
        s.rank[s.slot(m.from)] = p->rank;
      }
      break;
    case PhaseKind::local_maxrank:
      if (!delivered.empty()) unexpected(s, delivered.front(), ctx);
      if (ctx.pulse == 0) find_local_maxrank(s);
      break;
    case PhaseKind::global_maxrank:
      flood_global_maxrank(s, delivered, ctx, out);
      break;
    case PhaseKind::contract:
      check_eligibility_and_contract(s, delivered, ctx, out);
      break;
    case PhaseKind::termination:
      check_termination_status(s, delivered, ctx, out);
      break;
    case PhaseKind::local_mc:
      if (!delivered.empty()) unexpected(s, delivered.front(), ctx);
      if (ctx.pulse == 0) find_local_mincut(s);
      break;
    case PhaseKind::reduce_mc:
      reduce_global_mincut(s, delivered, ctx, out);
      break;
    case PhaseKind::broadcast_mc:
      broadcast_mincut(s, delivered, ctx, out);
      break;
  }
}

}  // namespace dmincut
