#include <algorithm>

#include "doctest.h"
#include "dmincut/generators.hpp"
#include "dmincut/graph.hpp"
#include "dmincut/oracles.hpp"

using namespace dmincut;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  return std::any_of(vs.begin(), vs.end(), [k](const Violation& v) { return v.kind == k; });
}

ViolationKind parse_failure(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("parse succeeded");
  return ViolationKind::empty_graph;
}

}  // namespace

TEST_CASE("edge list: P3 and K2") {
  Graph p3 = parse_edge_list("3 2\n1 2 3\n2 3 4");
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  CHECK(p3.weight(1, 2) == 3);
  CHECK(p3.weight(3, 2) == 4);
  CHECK_FALSE(p3.has_edge(1, 3));

  Graph k2 = parse_edge_list("2 1\n1 2 5\n");
  CHECK(k2.n() == 2);
  CHECK(k2.weight(2, 1) == 5);
}

TEST_CASE("edge list: comments, blank lines, rational weights") {
  Graph g = parse_edge_list("# header follows\n\n3 2  # n m\n1 2 3/2\n2 3 1/2\n",
                            ParseOptions{2});
  CHECK(g.weight(1, 2) == 3);
  CHECK(g.weight(2, 3) == 1);
  CHECK_THROWS_AS(parse_edge_list("2 1\n1 2 1/3\n", ParseOptions{2}), GraphError);
}

TEST_CASE("edge list: rejects bad input") {
  CHECK(parse_failure("3 2\n1 2 3\n1 2 4") == ViolationKind::duplicate_edge);
  CHECK(parse_failure("3 2\n1 2 3\n2 1 4") == ViolationKind::duplicate_edge);
  CHECK(parse_failure("3 2\n1 2 3") == ViolationKind::edge_count_mismatch);
  CHECK(parse_failure("3 2\n1 1 3\n2 3 1") == ViolationKind::self_loop);
  CHECK(parse_failure("3 2\n1 4 3\n2 3 1") == ViolationKind::vertex_out_of_range);
  CHECK(parse_failure("3 2\n1 2 0\n2 3 1") == ViolationKind::non_positive_weight);
  CHECK(parse_failure("4 2\n1 2 1\n3 4 1") == ViolationKind::disconnected);
  CHECK(parse_failure("3 2\n1 2 x\n2 3 1") == ViolationKind::malformed_line);
  CHECK(parse_failure("") == ViolationKind::empty_graph);
}

TEST_CASE("edge list: render then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorParams p;
    p.n = 2 + seed % 11;
    p.weight_max = 10;
    p.edge_probability = 0.4;
    Graph g = generate(Family::random_connected, p, seed);
    CHECK(parse_edge_list(render_edge_list(g)) == g);
  }
}

TEST_CASE("validate") {
  CHECK(validate(parse_edge_list("3 2\n1 2 3\n2 3 4")).empty());
  auto zero = validate(Graph(3, {{1, 2, 0}, {2, 3, 4}}));
  CHECK(has_kind(zero, ViolationKind::non_positive_weight));
  auto split = validate(Graph(4, {{1, 2, 1}, {3, 4, 1}}));
  CHECK(has_kind(split, ViolationKind::disconnected));
  CHECK_THROWS_AS(Graph::checked(4, {{1, 2, 1}, {3, 4, 1}}), GraphError);
}

TEST_CASE("neighbors are sorted and symmetric") {
  Graph g = parse_edge_list("4 4\n3 1 1\n1 2 2\n4 1 3\n2 3 4");
  auto nb = g.neighbors(1);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0].id == 2);
  CHECK(nb[1].id == 3);
  CHECK(nb[2].id == 4);
  for (VertexId u = 1; u <= g.n(); ++u) {
    for (const auto& x : g.neighbors(u)) CHECK(g.weight(x.id, u) == x.weight);
  }
  CHECK(g.total_weight() == 10);
}

TEST_CASE("generators: fixed examples") {
  Graph c4 = generate(parse_generator_spec("cycle:n=4"), 0);
  CHECK(c4.n() == 4);
  CHECK(c4.m() == 4);
  CHECK(brute_force_mincut(c4).value == 2);

  Graph k2 = generate(parse_generator_spec("complete:n=2,w=5"), 123);
  CHECK(k2.m() == 1);
  CHECK(k2.weight(1, 2) == 5);
  CHECK(brute_force_mincut(k2).value == 5);

  Graph planted = generate(parse_generator_spec("planted-cut:a=3,b=3,inter=2"), 1);
  CHECK(planted.n() == 6);
  CHECK(brute_force_mincut(planted).value == 2);

  Graph p5 = generate(parse_generator_spec("path:n=5"), 0);
  CHECK(p5.m() == 4);
  Graph k6 = generate(parse_generator_spec("complete:n=6"), 0);
  CHECK(k6.m() == 15);
}

TEST_CASE("generators: bad parameters") {
  CHECK_THROWS_AS(parse_generator_spec("hypercube:n=4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("cycle:n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("cycle:q=3"), std::invalid_argument);
  CHECK_THROWS(generate(parse_generator_spec("cycle:n=2"), 0));
  CHECK_THROWS(generate(parse_generator_spec("path:n=1"), 0));
  CHECK_THROWS(generate(parse_generator_spec("random-connected:n=5,wmin=3,wmax=2"), 0));
}

TEST_CASE("generators: spec rendering round-trips") {
  for (const char* text : {"cycle:n=7", "random-connected:n=9,p=0.25,wmin=1,wmax=10",
                           "planted-cut:a=4,b=4,inter=3"}) {
    GeneratorSpec s = parse_generator_spec(text);
    GeneratorSpec t = parse_generator_spec(render_generator_spec(s));
    CHECK(generate(s, 5) == generate(t, 5));
  }
}

TEST_CASE("generators: every output validates and is deterministic") {
  const char* specs[] = {"complete:n=5,wmax=4", "cycle:n=9", "path:n=6,wmin=2,wmax=9",
                         "random-connected:n=12,p=0.2,wmax=10", "planted-cut:a=5,b=4,inter=3"};
  for (const char* text : specs) {
    GeneratorSpec s = parse_generator_spec(text);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      Graph g = generate(s, seed);
      CHECK(validate(g).empty());
      CHECK(generate(s, seed) == g);
    }
  }
}

TEST_CASE("generators: planted cut is the unique minimum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams p;
    p.block_a = 2 + seed % 5;
    p.block_b = 2 + (seed / 5) % 5;
    p.n = p.block_a + p.block_b;
    p.inter_total = 1 + seed % 4;
    Graph g = generate(Family::planted_cut, p, seed);
    auto cut = brute_force_mincut(g);
    CHECK(cut.value == p.inter_total);
    CHECK(cut.minimal_count == 1);
  }
}
