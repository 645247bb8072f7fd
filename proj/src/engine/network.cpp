#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "dmincut/engine.hpp"

namespace dmincut {

namespace {

[[noreturn]] void corrupt(const std::string& what) { throw ProtocolError(what); }

}  // namespace

Network::Network(const Graph& g, std::uint64_t seed, std::uint32_t trial, std::uint32_t attempt,
                 const EngineOptions& options)
    : graph_(g),
      options_(options),
      nodes_(static_cast<std::size_t>(g.n()) + 1),
      streams_(static_cast<std::size_t>(g.n()) + 1),
      shuffle_rng_(rank_stream_seed(options.shuffle_seed, trial, attempt, 0)) {
  const std::uint64_t range = rank_range(g.m(), options.k);
  for (VertexId v = 1; v <= g.n(); ++v) {
    nodes_[v] = make_node(g, v);
    streams_[v] = RankStream(rank_stream_seed(seed, trial, attempt, v), range);
  }
  const std::uint64_t n = g.n();
  budget_ = static_cast<std::uint64_t>(options.pulse_budget_constant) * n * n;
  tag_.trial = trial;
  ctx_.n = g.n();
  metrics_.trial_index = trial;
  metrics_.attempt = attempt;
}

void Network::begin_phase(PhaseKind kind, VertexId reduce_sender, VertexId reduce_destination) {
  ++tag_.phase;
  ctx_.kind = kind;
  ctx_.pulse = 0;
  ctx_.tag = tag_;
  ctx_.reduce_sender = reduce_sender;
  ctx_.reduce_destination = reduce_destination;
}

void Network::inject(Message msg) {
  if (!graph_.has_edge(msg.from, msg.to)) corrupt("injected message on a non-edge");
  in_flight_.push_back(std::move(msg));
}

void Network::run_pulse() {
  std::vector<Message> delivering;
  delivering.swap(in_flight_);
  std::stable_sort(delivering.begin(), delivering.end(), [](const Message& a, const Message& b) {
    return std::pair(a.to, a.from) < std::pair(b.to, b.from);
  });

  auto next = delivering.begin();
  for (VertexId v = 1; v <= graph_.n(); ++v) {
    auto first = next;
    while (next != delivering.end() && next->to == v) ++next;
    if (options_.shuffle_delivery) std::shuffle(first, next, shuffle_rng_);

    Outbox out(ctx_.tag);
    auto& stream = streams_[v];
    step(nodes_[v], std::span<const Message>(first, next), ctx_, [&stream] { return stream(); },
         out);

    for (auto& msg : out.messages) {
      if (!graph_.has_edge(msg.from, msg.to)) {
        std::ostringstream os;
        os << "node " << msg.from << " sent " << to_string(msg.kind()) << " to non-neighbor "
           << msg.to;
        corrupt(os.str());
      }
      ++metrics_.messages_total;
      ++metrics_.messages_by_kind[static_cast<std::size_t>(msg.kind())];
      if (options_.trace != nullptr) *options_.trace << trace_line(pulse_, msg) << '\n';
      in_flight_.push_back(std::move(msg));
    }
    if (out.contraction) contractions_.push_back(*out.contraction);
  }
  ++pulse_;
  ++ctx_.pulse;
  metrics_.pulses = pulse_;
}

void Network::run_phase(PhaseKind kind, VertexId reduce_sender, VertexId reduce_destination) {
  begin_phase(kind, reduce_sender, reduce_destination);
  const std::uint32_t length = phase_length(kind, graph_.n());
  for (std::uint32_t p = 0; p < length; ++p) {
    if (p > 0 && in_flight_.empty()) {
      // Remaining pulses of the barrier are idle.
      pulse_ += length - p;
      ctx_.pulse += length - p;
      metrics_.pulses = pulse_;
      break;
    }
    run_pulse();
  }
  if (!in_flight_.empty()) {
    std::ostringstream os;
    os << to_string(in_flight_.front().kind()) << " from " << in_flight_.front().from
       << " still in flight at the end of " << to_string(kind);
    corrupt(os.str());
  }
  if (pulse_ > budget_) {
    std::ostringstream os;
    os << "pulse budget " << budget_ << " exceeded (" << pulse_ << " pulses)";
    throw PulseBudgetExceeded(os.str());
  }
}

std::vector<std::pair<VertexId, VertexId>> reduction_schedule(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::uint64_t half = 1; half < n; half *= 2) {  // half = 2^(i-1), i = 1..ceil(log2 n)
    for (std::uint64_t j = half; j + 1 <= n; j += 2 * half) {
      out.emplace_back(static_cast<VertexId>(j),
                       static_cast<VertexId>(std::min<std::uint64_t>(j + half, n)));
    }
  }
  return out;
}

void Network::run_reduction() {
  for (auto [sender, destination] : reduction_schedule(graph_.n())) {
    run_phase(PhaseKind::reduce_mc, sender, destination);
  }
}

std::vector<ContractionEvent> Network::take_contractions() {
  std::vector<ContractionEvent> out;
  out.swap(contractions_);
  return out;
}

std::size_t Network::group_count() const {
  std::set<GroupId> groups;
  for (const auto& s : nodes()) groups.insert(s.group);
  return groups.size();
}

bool Network::rank_collision() const {
  std::set<std::uint64_t> values;
  for (const auto& s : nodes()) {
    for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
      if (s.neighbors[i] < s.id && !s.rank[i].is_null() && !values.insert(s.rank[i].value).second) {
        return true;
      }
    }
  }
  return false;
}

void Network::check_rank_tables() const {
  const std::uint64_t range = rank_range(graph_.m(), options_.k);
  for (const auto& e : graph_.edges()) {
    const auto& lo = node(e.u);
    const auto& hi = node(e.v);
    const Rank& r = hi.rank_to(e.u);
    std::ostringstream os;
    os << "edge (" << e.u << ',' << e.v << "): ";
    if (lo.rank_to(e.v) != r) corrupt(os.str() + "rank differs between endpoints");
    if (r.is_null() != (hi.weight_to(e.u) == 0)) corrupt(os.str() + "rank is 0 iff weight is 0 violated");
    if (!r.is_null() && (r.value > range || r.hi != e.v || r.lo != e.u)) {
      corrupt(os.str() + "rank out of range or mislabeled");
    }
  }
}

void Network::check_maxrank_agreement() const {
  Rank global;
  for (const auto& s : nodes()) {
    for (const auto& r : s.rank) global = std::max(global, r);
  }
  for (const auto& s : nodes()) {
    if (s.maxrank != global) {
      std::ostringstream os;
      os << "node " << s.id << " holds maxrank " << to_string(s.maxrank) << ", global maximum is "
         << to_string(global);
      corrupt(os.str());
    }
  }
}

void Network::check_group_coherence() const {
  std::vector<VertexId> parent(static_cast<std::size_t>(graph_.n()) + 1);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& s : nodes()) {
    bool all_zero = true;
    for (std::size_t i = 0; i < s.neighbors.size(); ++i) {
      const VertexId v = s.neighbors[i];
      const auto& other = node(v);
      std::ostringstream os;
      os << "edge (" << s.id << ',' << v << "): ";
      if (s.weight[i] != other.weight_to(s.id)) corrupt(os.str() + "weights differ between endpoints");
      if ((s.weight[i] == 0) != (s.group == other.group)) {
        corrupt(os.str() + "weight is 0 iff same group violated");
      }
      if (s.neighbor_group[i] != other.group) corrupt(os.str() + "stale neighbor group");
      if (s.weight[i] != 0) all_zero = false;
      if (s.weight[i] == 0) parent[find(s.id)] = find(v);
    }
    if ((s.status == Status::inactive) != all_zero) {
      std::ostringstream os;
      os << "node " << s.id << ": status INACTIVE iff all weights 0 violated";
      corrupt(os.str());
    }
  }

  // Each group must be connected through its zero-weight edges.
  std::map<GroupId, VertexId> root_of_group;
  for (const auto& s : nodes()) {
    auto [it, inserted] = root_of_group.emplace(s.group, find(s.id));
    if (!inserted && it->second != find(s.id)) {
      corrupt("group " + to_string(s.group) + " is not connected by zero-weight edges");
    }
  }
}

}  // namespace dmincut
