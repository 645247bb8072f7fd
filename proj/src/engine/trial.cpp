#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "dmincut/engine.hpp"

namespace dmincut {

namespace {

struct AttemptOutcome {
  std::optional<CutResult> result;
  std::optional<CollisionRecord> collision;
};

// Builds the result from the nodes' final state and cross-checks the
// broadcast value against the crossing-edge sum.
CutResult collect_result(const Network& net, std::vector<ContractionEvent> contractions) {
  const Graph& g = net.graph();
  CutResult r;
  r.metrics = net.metrics();
  r.contractions = std::move(contractions);
  r.value = net.node(g.n()).mc;

  r.sides.side.resize(g.n());
  for (const auto& s : net.nodes()) {
    r.partition.push_back(s.group);
    r.sides.side[s.id - 1] = s.group == net.node(1).group ? 0 : 1;
    r.incident_cut_edges.push_back(s.live_neighbors());
    r.reported_values.push_back(s.mc);
  }
  Weight crossing = 0;
  for (const auto& e : g.canonical_edges()) {
    if (r.partition[e.u - 1] != r.partition[e.v - 1]) {
      r.cut_edges.push_back(e);
      crossing += e.w;
    }
  }
  if (net.group_count() != 2) throw ProtocolError("trial ended with other than two groups");
  for (const auto& s : net.nodes()) {
    if (s.mc != crossing) {
      std::ostringstream os;
      os << "node " << s.id << " reports cut " << s.mc << ", crossing weight is " << crossing;
      throw ProtocolError(os.str());
    }
  }
  return r;
}

AttemptOutcome run_attempt(const Graph& g, std::uint64_t seed, std::uint32_t trial,
                           std::uint32_t attempt, const EngineOptions& options) {
  Network net(g, seed, trial, attempt, options);
  const bool check = options.check_invariants;
  std::vector<ContractionEvent> contractions;

  std::uint32_t iteration = 0;
  for (;; ++iteration) {
    net.set_iteration(iteration);
    net.run_phase(PhaseKind::assign_rank);
    if (check) net.check_rank_tables();
    if (net.rank_collision()) {
      return {std::nullopt, CollisionRecord{trial, attempt, iteration}};
    }
    net.run_phase(PhaseKind::local_maxrank);
    net.run_phase(PhaseKind::global_maxrank);
    if (check) net.check_maxrank_agreement();

    const std::size_t groups_before = net.group_count();
    net.run_phase(PhaseKind::contract);
    auto fired = net.take_contractions();
    const std::size_t expected = groups_before > 2 ? 1 : 0;
    if (fired.size() != expected) {
      std::ostringstream os;
      os << fired.size() << " contractions in an iteration starting with " << groups_before
         << " groups";
      throw ProtocolError(os.str());
    }
    contractions.insert(contractions.end(), fired.begin(), fired.end());
    if (check) net.check_group_coherence();

    net.run_phase(PhaseKind::termination);
    const bool stop = net.node(1).stop;
    for (const auto& s : net.nodes()) {
      if (s.stop != stop) throw ProtocolError("nodes disagree on the stop flag");
    }
    if (stop != fired.empty()) throw ProtocolError("stop flag does not match contraction outcome");
    if (stop) break;
  }

  net.set_iteration(iteration + 1);
  net.run_phase(PhaseKind::local_mc);
  net.run_reduction();
  net.metrics().doubled_cut = net.node(g.n()).mc;
  net.run_phase(PhaseKind::broadcast_mc);

  net.metrics().iterations = iteration + 1;
  net.metrics().contractions = static_cast<std::uint32_t>(contractions.size());
  if (contractions.size() + 2 > g.n()) {
    throw ProtocolError("more than n - 2 contractions");
  }
  return {collect_result(net, std::move(contractions)), std::nullopt};
}

}  // namespace

CutResult run_trial(const Graph& g, std::uint64_t seed, std::uint32_t trial_index,
                    const EngineOptions& options) {
  std::vector<CollisionRecord> aborts;
  for (std::uint32_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto outcome = run_attempt(g, seed, trial_index, attempt, options);
    if (outcome.collision) {
      aborts.push_back(*outcome.collision);
      continue;
    }
    CutResult r = std::move(*outcome.result);
    r.metrics.aborts = std::move(aborts);
    r.metrics.collision_abort = !r.metrics.aborts.empty();
    return r;
  }
  throw ProtocolError("rank collisions in every attempt; graph too small for the rank range");
}

std::uint32_t default_trial_count(VertexId n) {
  const double nn = static_cast<double>(n);
  const double t = std::ceil(nn * nn * std::log(nn));
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(t));
}

ExperimentResult run_experiment(const Graph& g, std::uint64_t seed,
                                std::optional<std::uint32_t> trials,
                                const EngineOptions& options,
                                std::optional<Weight> oracle_value) {
  const std::uint32_t count = trials.value_or(default_trial_count(g.n()));
  if (count == 0) throw std::invalid_argument("trials must be >= 1");

  EngineOptions worker_options = options;
  worker_options.trace = nullptr;

  std::vector<std::optional<CutResult>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint32_t> next{0};
  auto work = [&] {
    for (std::uint32_t t = next++; t < count; t = next++) {
      try {
        results[t] = run_trial(g, seed, t, worker_options);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, count));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentResult out;
  auto& sum = out.summary;
  sum.trials = count;
  sum.oracle_value = oracle_value;
  std::uint32_t best = 0;
  for (std::uint32_t t = 0; t < count; ++t) {
    const auto& r = *results[t];
    out.trial_values.push_back(r.value);
    out.trials.push_back(r.metrics);
    if (r.value < results[best]->value) best = t;
    sum.mean_messages += static_cast<double>(r.metrics.messages_total);
    sum.max_messages = std::max(sum.max_messages, r.metrics.messages_total);
    sum.mean_pulses += static_cast<double>(r.metrics.pulses);
    sum.max_pulses = std::max(sum.max_pulses, r.metrics.pulses);
    sum.collision_aborts += r.metrics.aborts.size();
    if (oracle_value && r.value == *oracle_value) ++sum.successes;
  }
  sum.mean_messages /= count;
  sum.mean_pulses /= count;
  sum.best_trial = best;
  out.best = std::move(*results[best]);
  if (oracle_value) {
    sum.match = out.best.value == *oracle_value;
    sum.per_trial_success_rate = static_cast<double>(sum.successes) / count;
  }
  return out;
}

}  // namespace dmincut
