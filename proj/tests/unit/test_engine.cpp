#include <sstream>

#include "doctest.h"
#include "dmincut/engine.hpp"
#include "dmincut/generators.hpp"

using namespace dmincut;

namespace {

const Graph& p3() {
  static const Graph g = parse_edge_list("3 2\n1 2 3\n2 3 4");
  return g;
}

void force_rank(Network& net, VertexId a, VertexId b, std::uint64_t value) {
  const Rank r{value, std::max(a, b), std::min(a, b)};
  net.node(a).rank[net.node(a).slot(b)] = r;
  net.node(b).rank[net.node(b).slot(a)] = r;
}

// Drives a P3 trial by hand with the first iteration's ranks fixed.
std::pair<Weight, Bipartition> forced_p3(std::uint64_t r12, std::uint64_t r23) {
  Network net(p3(), 1, 0, 0, EngineOptions{});
  for (std::uint32_t it = 0;; ++it) {
    net.set_iteration(it);
    net.run_phase(PhaseKind::assign_rank);
    if (it == 0) {
      force_rank(net, 1, 2, r12);
      force_rank(net, 2, 3, r23);
    }
    net.check_rank_tables();
    net.run_phase(PhaseKind::local_maxrank);
    net.run_phase(PhaseKind::global_maxrank);
    net.check_maxrank_agreement();
    net.run_phase(PhaseKind::contract);
    net.take_contractions();
    net.check_group_coherence();
    net.run_phase(PhaseKind::termination);
    if (net.node(1).stop) break;
  }
  net.run_phase(PhaseKind::local_mc);
  net.run_reduction();
  net.run_phase(PhaseKind::broadcast_mc);
  Bipartition p;
  for (const auto& s : net.nodes()) p.side.push_back(s.group == net.node(1).group ? 0 : 1);
  for (const auto& s : net.nodes()) CHECK(s.mc == net.node(3).mc);
  return {net.node(3).mc, p};
}

}  // namespace

TEST_CASE("pulse delivery") {
  Graph k2 = parse_edge_list("2 1\n1 2 5");
  Network net(k2, 1, 0, 0, EngineOptions{});
  net.begin_phase(PhaseKind::local_maxrank);
  const auto before = net.node(1).maxrank;
  net.run_pulse();
  CHECK(net.pulse() == 1);
  CHECK(net.node(1).maxrank == before);

  Network fresh(k2, 1, 0, 0, EngineOptions{});
  fresh.begin_phase(PhaseKind::global_maxrank);
  fresh.inject(Message{1, 2, GroupId::singleton(1), {}, FindMaxRank{{9, 2, 1}}});
  CHECK(fresh.node(2).maxrank.is_null());
  fresh.run_pulse();
  CHECK(fresh.node(2).maxrank == Rank{9, 2, 1});
}

TEST_CASE("forced ranks on P3") {
  auto [v1, p1] = forced_p3(30, 1);  // (1,2) first
  CHECK(v1 == 4);
  CHECK(p1.side == std::vector<std::uint8_t>{0, 0, 1});
  CHECK(partition_cut_weight(p3(), p1) == 4);

  auto [v2, p2] = forced_p3(1, 30);  // (2,3) first
  CHECK(v2 == 3);
  CHECK(p2.side == std::vector<std::uint8_t>{0, 1, 1});
}

TEST_CASE("run_trial basics") {
  Graph k2 = parse_edge_list("2 1\n1 2 5");
  CutResult r = run_trial(k2, 1, 0);
  CHECK(r.value == 5);
  CHECK(r.contractions.empty());
  CHECK(r.metrics.doubled_cut == 10);
  CHECK(r.cut_edges.size() == 1);

  CutResult q = run_trial(p3(), 3, 0);
  CHECK((q.value == 3 || q.value == 4));
  CHECK(q.contractions.size() == 1);
  CHECK(partition_cut_weight(p3(), q.sides) == q.value);
  for (Weight v : q.reported_values) CHECK(v == q.value);
  if (q.value == 4) {
    CHECK(q.incident_cut_edges[1] == std::vector<VertexId>{3});
    CHECK(q.incident_cut_edges[0].empty());
  }
}

TEST_CASE("determinism and delivery order independence") {
  Graph g = generate(parse_generator_spec("random-connected:n=9,p=0.4,wmax=10"), 4);
  for (std::uint32_t t = 0; t < 10; ++t) {
    CutResult a = run_trial(g, 77, t);
    CutResult b = run_trial(g, 77, t);
    CHECK(a.value == b.value);
    CHECK(a.contractions == b.contractions);
    CHECK(a.metrics.messages_total == b.metrics.messages_total);
    CHECK(a.metrics.pulses == b.metrics.pulses);

    EngineOptions shuffled;
    shuffled.shuffle_delivery = true;
    shuffled.shuffle_seed = 1000 + t;
    CutResult c = run_trial(g, 77, t, shuffled);
    CHECK(c.value == a.value);
    CHECK(c.contractions == a.contractions);
    CHECK(c.sides == a.sides);
  }
}

TEST_CASE("trace lines match the message count") {
  std::ostringstream trace;
  EngineOptions o;
  o.trace = &trace;
  CutResult r = run_trial(p3(), 1, 0, o);
  REQUIRE(r.metrics.aborts.empty());
  std::istringstream in(trace.str());
  std::string line;
  std::uint64_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == r.metrics.messages_total);
  std::uint64_t by_kind = 0;
  for (auto c : r.metrics.messages_by_kind) by_kind += c;
  CHECK(by_kind == r.metrics.messages_total);
}

TEST_CASE("pulse budget") {
  Graph g = generate(parse_generator_spec("cycle:n=8"), 0);
  EngineOptions tight;
  tight.pulse_budget_constant = 1;
  CHECK_THROWS_AS(run_trial(g, 1, 0, tight), PulseBudgetExceeded);
  CutResult r = run_trial(g, 1, 0);
  CHECK(r.metrics.pulses <= 20u * 8 * 8);
}

TEST_CASE("collisions are redrawn and logged") {
  Graph g = generate(parse_generator_spec("complete:n=4"), 0);
  std::uint64_t aborts = 0;
  for (std::uint32_t t = 0; t < 400; ++t) {
    CutResult r = run_trial(g, 5, t);
    for (const auto& a : r.metrics.aborts) {
      CHECK(a.trial == t);
      CHECK(a.attempt < r.metrics.attempt);
    }
    CHECK(r.metrics.attempt == r.metrics.aborts.size());
    aborts += r.metrics.aborts.size();
  }
  CHECK(aborts < 20);
}

TEST_CASE("run_experiment") {
  Graph c4 = parse_edge_list("4 4\n1 2 1\n2 3 1\n3 4 1\n1 4 1");
  ExperimentResult e = run_experiment(c4, 1, 100, {}, 2);
  CHECK(e.best.value == 2);
  CHECK(e.summary.match == true);
  CHECK(e.trial_values.size() == 100);
  CHECK(*std::min_element(e.trial_values.begin(), e.trial_values.end()) == e.best.value);

  Graph k2 = parse_edge_list("2 1\n1 2 5");
  CHECK(run_experiment(k2, 1, 1).best.value == 5);

  Graph planted = generate(parse_generator_spec("planted-cut:a=4,b=4,inter=3"), 2);
  CHECK(run_experiment(planted, 9, std::nullopt).best.value == 3);

  EngineOptions par;
  par.threads = 4;
  ExperimentResult s = run_experiment(planted, 9, 60);
  ExperimentResult p = run_experiment(planted, 9, 60, par);
  CHECK(s.trial_values == p.trial_values);
  CHECK(s.summary.best_trial == p.summary.best_trial);

  CHECK(default_trial_count(2) == 3);
  CHECK(default_trial_count(8) == 134);
  CHECK_THROWS_AS(run_experiment(k2, 1, 0), std::invalid_argument);
}
