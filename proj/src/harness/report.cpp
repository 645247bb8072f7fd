#include <iomanip>
#include <sstream>

#include "dmincut/harness.hpp"
#include "json.hpp"

namespace dmincut {

using nlohmann::json;

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v, e.w}); }
void from_json(const json& j, Edge& e) {
  e.u = j.at(0).get<VertexId>();
  e.v = j.at(1).get<VertexId>();
  e.w = j.at(2).get<Weight>();
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TrialRecord, trial, value, messages, pulses, contractions,
                                   iterations, attempt, doubled_cut, messages_by_kind)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CollisionLogEntry, trial, attempt, iteration)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyCase, graph_index, n, m, trial, distributed_value,
                                   sequential_value, oracle_value, equivalent, above_oracle,
                                   divergence)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyReport, source, seed, graphs, trials_per_graph, cases,
                                   mismatches, below_oracle, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StatsRow, graph_index, n, m, oracle_value, trials, successes,
                                   success_rate, bound, p_value, passed, repetitions,
                                   experiment_trials, experiment_successes, max_pulses,
                                   collision_aborts)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StatsReport, source, seed, alpha, rows, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComplexityRow, n, m, trials, mean_messages, max_messages,
                                   mean_pulses, max_pulses, message_ratio, pulse_ratio, collision_aborts)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComplexityReport, family, seed, rows, message_constant,
                                   pulse_constant, message_spread, pulse_spread, within_budget)

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json run_report_json(const RunReport& r) {
  json j;
  j["source"] = r.source;
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["best_value"] = r.best_value;
  j["best_trial"] = r.best_trial;
  j["best_contractions"] = r.best_contractions;
  j["partition"] = r.partition;
  j["cut_edges"] = r.cut_edges;
  j["incident_cut_edges"] = r.incident_cut_edges;
  j["trial_records"] = r.trial_records;
  j["mean_messages"] = r.mean_messages;
  j["max_messages"] = r.max_messages;
  j["mean_pulses"] = r.mean_pulses;
  j["max_pulses"] = r.max_pulses;
  j["pulse_budget"] = r.pulse_budget;
  j["collisions"] = r.collisions;
  j["oracle"] = r.oracle;
  j["oracle_value"] = optional_json(r.oracle_value);
  j["match"] = optional_json(r.match);
  j["success_rate"] = optional_json(r.success_rate);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <typename T>
T parse_as(std::string_view text) {
  return json::parse(text).get<T>();
}

}  // namespace

std::string to_json(const RunReport& r) { return dump(run_report_json(r)); }
std::string to_json(const VerifyReport& r) { return dump(json(r)); }
std::string to_json(const StatsReport& r) { return dump(json(r)); }
std::string to_json(const ComplexityReport& r) { return dump(json(r)); }

RunReport run_report_from_json(std::string_view text) {
  const json j = json::parse(text);
  RunReport r;
  j.at("source").get_to(r.source);
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("seed").get_to(r.seed);
  j.at("k").get_to(r.k);
  j.at("trials").get_to(r.trials);
  j.at("best_value").get_to(r.best_value);
  j.at("best_trial").get_to(r.best_trial);
  j.at("best_contractions").get_to(r.best_contractions);
  j.at("partition").get_to(r.partition);
  j.at("cut_edges").get_to(r.cut_edges);
  j.at("incident_cut_edges").get_to(r.incident_cut_edges);
  j.at("trial_records").get_to(r.trial_records);
  j.at("mean_messages").get_to(r.mean_messages);
  j.at("max_messages").get_to(r.max_messages);
  j.at("mean_pulses").get_to(r.mean_pulses);
  j.at("max_pulses").get_to(r.max_pulses);
  j.at("pulse_budget").get_to(r.pulse_budget);
  j.at("collisions").get_to(r.collisions);
  j.at("oracle").get_to(r.oracle);
  r.oracle_value = optional_from<Weight>(j, "oracle_value");
  r.match = optional_from<bool>(j, "match");
  r.success_rate = optional_from<double>(j, "success_rate");
  return r;
}

VerifyReport verify_report_from_json(std::string_view text) {
  return parse_as<VerifyReport>(text);
}
StatsReport stats_report_from_json(std::string_view text) { return parse_as<StatsReport>(text); }
ComplexityReport complexity_report_from_json(std::string_view text) {
  return parse_as<ComplexityReport>(text);
}

// Text and CSV renderers.

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render(const RunReport& r, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json:
      return to_json(r);
    case EmitFormat::csv:
      os << "trial,value,messages,pulses,contractions,iterations,attempt\n";
      for (const auto& t : r.trial_records) {
        os << t.trial << ',' << t.value << ',' << t.messages << ',' << t.pulses << ','
           << t.contractions << ',' << t.iterations << ',' << t.attempt << '\n';
      }
      return os.str();
    case EmitFormat::text:
      break;
  }
  os << std::left;
  os << std::setw(18) << "source" << r.source << '\n';
  os << std::setw(18) << "vertices/edges" << r.n << " / " << r.m << '\n';
  os << std::setw(18) << "seed" << r.seed << '\n';
  os << std::setw(18) << "trials" << r.trials << '\n';
  os << std::setw(18) << "best cut" << r.best_value << " (trial " << r.best_trial << ")\n";
  os << std::setw(18) << "side 0";
  for (std::size_t v = 0; v < r.partition.size(); ++v) {
    if (r.partition[v] == 0) os << (v + 1) << ' ';
  }
  os << '\n' << std::setw(18) << "side 1";
  for (std::size_t v = 0; v < r.partition.size(); ++v) {
    if (r.partition[v] == 1) os << (v + 1) << ' ';
  }
  os << '\n' << std::setw(18) << "cut edges";
  for (const auto& e : r.cut_edges) os << '(' << e.u << ',' << e.v << ':' << e.w << ") ";
  os << '\n';
  os << std::setw(18) << "messages" << "mean " << r.mean_messages << ", max " << r.max_messages
     << '\n';
  os << std::setw(18) << "pulses" << "mean " << r.mean_pulses << ", max " << r.max_pulses
     << " (budget " << r.pulse_budget << ")\n";
  os << std::setw(18) << "collision aborts" << r.collisions.size() << '\n';
  if (r.oracle_value) {
    os << std::setw(18) << "oracle" << r.oracle << " = " << *r.oracle_value << '\n';
    os << std::setw(18) << "match" << yes_no(r.match.value_or(false)) << '\n';
    os << std::setw(18) << "trial success" << r.success_rate.value_or(0.0) << '\n';
  }
  return os.str();
}

std::string render(const VerifyReport& r, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json:
      return to_json(r);
    case EmitFormat::csv:
      os << "graph,n,m,trial,distributed,sequential,oracle,equivalent,above_oracle\n";
      for (const auto& c : r.cases) {
        os << c.graph_index << ',' << c.n << ',' << c.m << ',' << c.trial << ','
           << c.distributed_value << ',' << c.sequential_value << ',' << c.oracle_value << ','
           << c.equivalent << ',' << c.above_oracle << '\n';
      }
      return os.str();
    case EmitFormat::text:
      break;
  }
  os << "source " << r.source << ", " << r.graphs << " graph(s) x " << r.trials_per_graph
     << " trial(s)\n";
  os << "cases " << r.cases.size() << ", mismatches " << r.mismatches << ", below oracle "
     << r.below_oracle << '\n';
  for (const auto& c : r.cases) {
    if (!c.equivalent || !c.above_oracle) {
      os << "  graph " << c.graph_index << " trial " << c.trial << ": " << c.divergence << '\n';
    }
  }
  os << (r.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render(const StatsReport& r, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json:
      return to_json(r);
    case EmitFormat::csv:
      os << "graph,n,m,oracle,trials,successes,rate,bound,p_value,passed,repetitions,"
            "experiment_trials,experiment_successes,max_pulses,collision_aborts\n";
      for (const auto& s : r.rows) {
        os << s.graph_index << ',' << s.n << ',' << s.m << ',' << s.oracle_value << ','
           << s.trials << ',' << s.successes << ',' << s.success_rate << ',' << s.bound << ','
           << s.p_value << ',' << s.passed << ',' << s.repetitions << ',' << s.experiment_trials
           << ',' << s.experiment_successes << ',' << s.max_pulses << ',' << s.collision_aborts << '\n';
      }
      return os.str();
    case EmitFormat::text:
      break;
  }
  os << "source " << r.source << ", alpha " << r.alpha << '\n';
  os << std::left << std::setw(7) << "graph" << std::setw(5) << "n" << std::setw(6) << "m"
     << std::setw(8) << "trials" << std::setw(10) << "success" << std::setw(12) << "rate"
     << std::setw(12) << "bound" << std::setw(12) << "p-value"
     << "full runs\n";
  for (const auto& s : r.rows) {
    os << std::setw(7) << s.graph_index << std::setw(5) << s.n << std::setw(6) << s.m
       << std::setw(8) << s.trials << std::setw(10) << s.successes << std::setw(12)
       << s.success_rate << std::setw(12) << s.bound << std::setw(12) << s.p_value
       << s.experiment_successes << '/' << s.repetitions << '\n';
  }
  os << (r.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render(const ComplexityReport& r, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json:
      return to_json(r);
    case EmitFormat::csv:
      os << "n,m,trials,mean_messages,max_messages,mean_pulses,max_pulses,messages_per_mn2,"
            "pulses_per_n2,collision_aborts\n";
      for (const auto& row : r.rows) {
        os << row.n << ',' << row.m << ',' << row.trials << ',' << row.mean_messages << ','
           << row.max_messages << ',' << row.mean_pulses << ',' << row.max_pulses << ','
           << row.message_ratio << ',' << row.pulse_ratio << ',' << row.collision_aborts << '\n';
      }
      return os.str();
    case EmitFormat::text:
      break;
  }
  os << "family " << r.family << '\n';
  os << std::left << std::setw(6) << "n" << std::setw(7) << "m" << std::setw(8) << "trials"
     << std::setw(14) << "messages" << std::setw(12) << "pulses" << std::setw(14) << "msg/(mn^2)"
     << "pulses/n^2\n";
  for (const auto& row : r.rows) {
    os << std::setw(6) << row.n << std::setw(7) << row.m << std::setw(8) << row.trials
       << std::setw(14) << row.mean_messages << std::setw(12) << row.mean_pulses << std::setw(14)
       << row.message_ratio << row.pulse_ratio << '\n';
  }
  os << "message constant " << r.message_constant << " (spread " << r.message_spread << ")\n";
  os << "pulse constant " << r.pulse_constant << " (spread " << r.pulse_spread << ")\n";
  os << "within budget " << yes_no(r.within_budget) << '\n';
  return os.str();
}

}  // namespace dmincut
