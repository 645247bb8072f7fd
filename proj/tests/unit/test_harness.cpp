#include <sstream>

#include "doctest.h"
#include "dmincut/harness.hpp"
#include "dmincut/stats.hpp"

using namespace dmincut;

namespace {

std::string data(const char* name) { return std::string(DMINCUT_TEST_DATA) + "/" + name; }

ExperimentConfig file_config(const char* name) {
  ExperimentConfig c;
  c.graph_file = data(name);
  return c;
}

ExperimentConfig gen_config(const char* spec) {
  ExperimentConfig c;
  c.generator = spec;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig c = file_config("p3.txt");
  CHECK_NOTHROW(c.validate());
  c.k = 4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.k = 5;
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.trials.reset();
  c.generator = "cycle:n=4";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  ExperimentConfig none;
  CHECK_THROWS_AS(none.validate(), ConfigError);
  CHECK_THROWS_AS(gen_config("torus:n=4").validate(), ConfigError);

  CHECK(parse_oracle_choice("sw") == OracleChoice::stoer_wagner);
  CHECK_THROWS_AS(parse_oracle_choice("exact"), ConfigError);
  CHECK(parse_emit_format("csv") == EmitFormat::csv);
  CHECK(parse_command("complexity") == Command::complexity);
}

TEST_CASE("run command") {
  ExperimentConfig c = file_config("p3.txt");
  c.trials = 50;
  RunReport r = cmd_run(c);
  CHECK(r.best_value == 3);
  CHECK(r.oracle_value == 3);
  CHECK(r.match == true);
  CHECK(r.partition == std::vector<int>{0, 1, 1});
  REQUIRE(r.cut_edges.size() == 1);
  CHECK(r.cut_edges[0] == Edge{1, 2, 3});
  CHECK(r.incident_cut_edges[0] == std::vector<VertexId>{2});
  CHECK(r.incident_cut_edges[2].empty());
  CHECK(r.trial_records.size() == 50);

  RunReport k2 = cmd_run(file_config("k2.txt"));
  CHECK(k2.best_value == 5);
  CHECK(k2.best_contractions == 0);
  CHECK(k2.trials == 3);
}

TEST_CASE("reports round-trip through JSON") {
  ExperimentConfig c = file_config("c4.txt");
  c.trials = 20;
  RunReport r = cmd_run(c);
  CHECK(run_report_from_json(to_json(r)) == r);

  ExperimentConfig v = gen_config("random-connected:n=7,p=0.4,wmax=10");
  v.graphs = 3;
  v.trials = 4;
  VerifyReport vr = cmd_verify(v);
  CHECK(vr.passed);
  CHECK(vr.cases.size() == 12);
  CHECK(verify_report_from_json(to_json(vr)) == vr);

  ExperimentConfig s = file_config("c4.txt");
  s.trials = 200;
  StatsReport sr = cmd_stats(s);
  CHECK(stats_report_from_json(to_json(sr)) == sr);

  ExperimentConfig x = gen_config("cycle:n=4");
  x.sizes = {4, 6};
  x.trials = 2;
  ComplexityReport xr = cmd_complexity(x);
  CHECK(complexity_report_from_json(to_json(xr)) == xr);
  CHECK(xr.rows.size() == 2);
}

TEST_CASE("reports are byte-reproducible") {
  ExperimentConfig c = gen_config("random-connected:n=9,p=0.3,wmax=10");
  c.seed = 42;
  c.trials = 30;
  CHECK(to_json(cmd_run(c)) == to_json(cmd_run(c)));
  c.threads = 3;
  std::string threaded = to_json(cmd_run(c));
  c.threads = 1;
  CHECK(threaded == to_json(cmd_run(c)));
}

TEST_CASE("stats command") {
  ExperimentConfig k2 = file_config("k2.txt");
  k2.trials = 50;
  StatsReport r = cmd_stats(k2);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].success_rate == 1.0);
  CHECK(r.passed);

  ExperimentConfig c4 = file_config("c4.txt");
  c4.trials = 2000;
  StatsReport q = cmd_stats(c4);
  CHECK(q.rows[0].success_rate >= 1.0 / 6);
  CHECK(q.passed);
}

TEST_CASE("complexity base case") {
  ExperimentConfig c = gen_config("complete:n=2");
  c.sizes = {2};
  c.trials = 1;
  ComplexityReport r = cmd_complexity(c);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].max_pulses <= 20u * 4);
  CHECK(r.within_budget);
}

TEST_CASE("verify on trivial and small graphs") {
  VerifyReport k2 = cmd_verify(file_config("k2.txt"));
  CHECK(k2.passed);
  VerifyReport c4 = cmd_verify(file_config("c4.txt"));
  for (const auto& cs : c4.cases) CHECK(cs.distributed_value >= 2);
}

TEST_CASE("execute maps failures to exit codes") {
  std::ostringstream out, err;
  ExperimentConfig bad_k = file_config("p3.txt");
  bad_k.k = 4;
  CHECK(execute(Command::run, bad_k, out, err) == exit_config_error);
  CHECK(execute(Command::run, file_config("duplicate.txt"), out, err) == exit_input_error);
  CHECK(execute(Command::run, file_config("missing.txt"), out, err) == exit_input_error);
  ExperimentConfig tight = gen_config("cycle:n=6");
  tight.pulse_budget_constant = 1;
  CHECK(execute(Command::run, tight, out, err) == exit_protocol_error);

  std::ostringstream ok;
  ExperimentConfig text = file_config("p3.txt");
  text.trials = 5;
  text.emit = EmitFormat::csv;
  CHECK(execute(Command::run, text, ok, err) == exit_ok);
  CHECK(ok.str().rfind("trial,value,", 0) == 0);
}

TEST_CASE("binomial helpers") {
  CHECK(stats::binomial_cdf(0, 1, 0.5) == doctest::Approx(0.5));
  CHECK(stats::binomial_cdf(2, 4, 0.5) == doctest::Approx(11.0 / 16));
  CHECK(stats::binomial_cdf(4, 4, 0.3) == 1.0);
  CHECK(stats::karger_success_bound(8) == doctest::Approx(1.0 / 28));
  CHECK(stats::binomial_lower_tail_p_value(40, 2000, 1.0 / 28) < 0.01);
  CHECK(stats::binomial_lower_tail_p_value(72, 2000, 1.0 / 28) > 0.01);
  CHECK(stats::poisson_upper_quantile(0.0, 0.99) == 0);
  CHECK(stats::poisson_upper_quantile(1.0, 0.99) == 4);
}
