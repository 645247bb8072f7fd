#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmincut/generators.hpp"
#include "dmincut/harness.hpp"

namespace py = pybind11;
using namespace dmincut;

namespace {

py::dict cut_to_dict(const CutResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["sides"] = std::vector<int>(r.sides.side.begin(), r.sides.side.end());
  std::vector<std::tuple<VertexId, VertexId, Weight>> edges;
  for (const auto& e : r.cut_edges) edges.emplace_back(e.u, e.v, e.w);
  d["cut_edges"] = edges;
  d["incident_cut_edges"] = r.incident_cut_edges;
  std::vector<std::pair<VertexId, VertexId>> seq;
  for (const auto& c : r.contractions) seq.emplace_back(c.owner, c.partner);
  d["contractions"] = seq;
  d["messages"] = r.metrics.messages_total;
  d["pulses"] = r.metrics.pulses;
  d["attempt"] = r.metrics.attempt;
  return d;
}

ExperimentConfig make_config(std::optional<std::string> graph, std::optional<std::string> gen,
                             std::uint64_t seed, std::optional<std::uint32_t> trials, int k,
                             const std::string& oracle) {
  ExperimentConfig c;
  c.graph_file = std::move(graph);
  c.generator = std::move(gen);
  c.seed = seed;
  c.trials = trials;
  c.k = k;
  c.oracle = parse_oracle_choice(oracle);
  return c;
}

}  // namespace

PYBIND11_MODULE(_dmincut, m) {
  m.doc() = "Distributed randomized min-cut simulator";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("weight", &Graph::weight)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::tuple<VertexId, VertexId, Weight>> out;
             for (const auto& e : g.canonical_edges()) out.emplace_back(e.u, e.v, e.w);
             return out;
           })
      .def("to_edge_list", &render_edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("parse_edge_list",
        [](const std::string& text) { return parse_edge_list(std::string_view(text)); },
        py::arg("text"));
  m.def("load_edge_list", [](const std::string& path) { return load_edge_list(path); });
  m.def("generate",
        [](const std::string& spec, std::uint64_t seed) {
          return generate(parse_generator_spec(spec), seed);
        },
        py::arg("spec"), py::arg("seed") = 0);

  m.def("brute_force_mincut", [](const Graph& g) {
    auto c = brute_force_mincut(g);
    return py::make_tuple(c.value, std::vector<int>(c.witness.side.begin(), c.witness.side.end()),
                          c.minimal_count);
  });
  m.def("stoer_wagner_mincut", &stoer_wagner_mincut);

  m.def(
      "run_trial",
      [](const Graph& g, std::uint64_t seed, std::uint32_t trial, int k) {
        EngineOptions o;
        o.k = k;
        py::gil_scoped_release release;
        CutResult r = run_trial(g, seed, trial, o);
        py::gil_scoped_acquire acquire;
        return cut_to_dict(r);
      },
      py::arg("graph"), py::arg("seed") = 1, py::arg("trial") = 0, py::arg("k") = 5);
  m.def("default_trial_count", &default_trial_count);

  // Harness commands return their JSON reports; the package decodes them.
  m.def(
      "run_json",
      [](std::optional<std::string> graph, std::optional<std::string> gen, std::uint64_t seed,
         std::optional<std::uint32_t> trials, int k, const std::string& oracle) {
        return to_json(cmd_run(make_config(graph, gen, seed, trials, k, oracle)));
      },
      py::arg("graph") = py::none(), py::arg("gen") = py::none(), py::arg("seed") = 1,
      py::arg("trials") = py::none(), py::arg("k") = 5, py::arg("oracle") = "auto");
  m.def(
      "verify_json",
      [](std::optional<std::string> graph, std::optional<std::string> gen, std::uint64_t seed,
         std::optional<std::uint32_t> trials, std::uint32_t graphs) {
        auto c = make_config(graph, gen, seed, trials, 5, "auto");
        c.graphs = graphs;
        return to_json(cmd_verify(c));
      },
      py::arg("graph") = py::none(), py::arg("gen") = py::none(), py::arg("seed") = 1,
      py::arg("trials") = py::none(), py::arg("graphs") = 1);
  m.def(
      "stats_json",
      [](std::optional<std::string> graph, std::optional<std::string> gen, std::uint64_t seed,
         std::optional<std::uint32_t> trials) {
        return to_json(cmd_stats(make_config(graph, gen, seed, trials, 5, "auto")));
      },
      py::arg("graph") = py::none(), py::arg("gen") = py::none(), py::arg("seed") = 1,
      py::arg("trials") = py::none());
  m.def(
      "complexity_json",
      [](const std::string& gen, std::vector<VertexId> sizes, std::uint64_t seed,
         std::optional<std::uint32_t> trials) {
        auto c = make_config(std::nullopt, gen, seed, trials, 5, "auto");
        c.sizes = std::move(sizes);
        return to_json(cmd_complexity(c));
      },
      py::arg("gen"), py::arg("sizes"), py::arg("seed") = 1, py::arg("trials") = py::none());
}
