#include "dmincut/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dmincut/oracles.hpp"

namespace dmincut {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::random_connected: return "random-connected";
    case Family::planted_cut: return "planted-cut";
  }
  return "unknown";
}

namespace {

Family parse_family(std::string_view name) {
  for (auto f : {Family::complete, Family::cycle, Family::path, Family::random_connected,
                 Family::planted_cut}) {
    if (to_string(f) == name) return f;
  }
  if (name == "random") return Family::random_connected;
  if (name == "planted") return Family::planted_cut;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for generator parameter " + std::string(key) + ": " +
                                std::string(value));
  }
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

class WeightDraw {
 public:
  WeightDraw(const GeneratorParams& p, std::mt19937_64& rng)
      : dist_(p.weight_min, p.weight_max), rng_(rng) {
    require(p.weight_min >= 1 && p.weight_min <= p.weight_max,
            "weights need 1 <= wmin <= wmax");
  }
  Weight operator()() { return dist_(rng_); }

 private:
  std::uniform_int_distribution<Weight> dist_;
  std::mt19937_64& rng_;
};

Graph make_complete(const GeneratorParams& p, std::mt19937_64& rng) {
  require(p.n >= 2, "complete graph needs n >= 2");
  WeightDraw draw(p, rng);
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= p.n; ++u)
    for (VertexId v = u + 1; v <= p.n; ++v) edges.push_back({u, v, draw()});
  return Graph::checked(p.n, std::move(edges));
}

Graph make_cycle(const GeneratorParams& p, std::mt19937_64& rng) {
  require(p.n >= 3, "cycle needs n >= 3");
  WeightDraw draw(p, rng);
  std::vector<Edge> edges;
  for (VertexId u = 1; u < p.n; ++u) edges.push_back({u, u + 1, draw()});
  edges.push_back({1, p.n, draw()});
  return Graph::checked(p.n, std::move(edges));
}

Graph make_path(const GeneratorParams& p, std::mt19937_64& rng) {
  require(p.n >= 2, "path needs n >= 2");
  WeightDraw draw(p, rng);
  std::vector<Edge> edges;
  for (VertexId u = 1; u < p.n; ++u) edges.push_back({u, u + 1, draw()});
  return Graph::checked(p.n, std::move(edges));
}

Graph make_random_connected(const GeneratorParams& p, std::mt19937_64& rng) {
  require(p.n >= 2, "random-connected needs n >= 2");
  require(p.edge_probability >= 0.0 && p.edge_probability <= 1.0, "p must lie in [0,1]");

  // Random spanning tree, then each remaining pair independently with probability p.
  std::vector<VertexId> order(p.n);
  std::iota(order.begin(), order.end(), VertexId{1});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId a = order[i];
    VertexId b = order[pick(rng)];
    pairs.emplace(std::min(a, b), std::max(a, b));
  }
  std::bernoulli_distribution extra(p.edge_probability);
  for (VertexId u = 1; u <= p.n; ++u) {
    for (VertexId v = u + 1; v <= p.n; ++v) {
      if (!pairs.contains({u, v}) && extra(rng)) pairs.emplace(u, v);
    }
  }
  WeightDraw draw(p, rng);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, draw()});
  return Graph::checked(p.n, std::move(edges));
}

Graph make_planted_cut(const GeneratorParams& p, std::mt19937_64& rng) {
  require(p.block_a >= 1 && p.block_b >= 1, "planted-cut needs block sizes a, b >= 1");
  require(p.inter_total >= 1, "planted-cut needs inter >= 1");
  const VertexId n = p.block_a + p.block_b;
  require(n >= 2, "planted-cut needs n >= 2");

  // Any cut other than the planted one splits a block of size s >= 2 and
  // costs at least (s - 1) * intra.
  VertexId smallest_splittable = 0;
  for (VertexId s : {p.block_a, p.block_b}) {
    if (s >= 2 && (smallest_splittable == 0 || s < smallest_splittable)) smallest_splittable = s;
  }
  Weight intra = p.intra_weight;
  if (smallest_splittable >= 2) {
    Weight factor = static_cast<Weight>(smallest_splittable - 1);
    if (intra == 0) intra = p.inter_total / factor + 1;
    require(intra * factor > p.inter_total,
            "planted-cut intra weight too small for a unique planted cut");
  } else if (intra == 0) {
    intra = 1;
  }

  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{1});
  std::shuffle(label.begin(), label.end(), rng);
  auto a_vertex = [&](VertexId i) { return label[i]; };
  auto b_vertex = [&](VertexId i) { return label[p.block_a + i]; };

  std::vector<Edge> edges;
  for (VertexId i = 0; i < p.block_a; ++i)
    for (VertexId j = i + 1; j < p.block_a; ++j) edges.push_back({a_vertex(i), a_vertex(j), intra});
  for (VertexId i = 0; i < p.block_b; ++i)
    for (VertexId j = i + 1; j < p.block_b; ++j) edges.push_back({b_vertex(i), b_vertex(j), intra});

  std::vector<std::pair<VertexId, VertexId>> crossing;
  for (VertexId i = 0; i < p.block_a; ++i)
    for (VertexId j = 0; j < p.block_b; ++j) crossing.emplace_back(i, j);
  std::shuffle(crossing.begin(), crossing.end(), rng);
  std::size_t count = static_cast<std::size_t>(
      std::min<Weight>(p.inter_total, static_cast<Weight>(crossing.size())));
  crossing.resize(count);
  std::vector<Weight> inter(count, 1);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  for (Weight extra = p.inter_total - static_cast<Weight>(count); extra > 0; --extra) {
    ++inter[pick(rng)];
  }
  for (std::size_t k = 0; k < count; ++k) {
    edges.push_back({a_vertex(crossing[k].first), b_vertex(crossing[k].second), inter[k]});
  }

  Graph g = Graph::checked(n, std::move(edges));
  if (n <= kBruteForceMaxVertices) {
    auto cut = brute_force_mincut(g);
    if (cut.value != p.inter_total || cut.minimal_count != 1) {
      throw std::logic_error("planted-cut generator produced a non-unique or wrong minimum cut");
    }
  }
  return g;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = parse_family(text.substr(0, colon));
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  auto& p = spec.params;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("generator parameter without '=': " + std::string(item));
    }
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    if (key == "n") {
      p.n = parse_value<VertexId>(key, value);
    } else if (key == "w") {
      p.weight_min = p.weight_max = parse_value<Weight>(key, value);
    } else if (key == "wmin") {
      p.weight_min = parse_value<Weight>(key, value);
    } else if (key == "wmax") {
      p.weight_max = parse_value<Weight>(key, value);
    } else if (key == "p") {
      p.edge_probability = std::stod(std::string(value));
    } else if (key == "a") {
      p.block_a = parse_value<VertexId>(key, value);
    } else if (key == "b") {
      p.block_b = parse_value<VertexId>(key, value);
    } else if (key == "inter") {
      p.inter_total = parse_value<Weight>(key, value);
    } else if (key == "intra") {
      p.intra_weight = parse_value<Weight>(key, value);
    } else {
      throw std::invalid_argument("unknown generator parameter: " + std::string(key));
    }
  }
  if (spec.family == Family::planted_cut) p.n = p.block_a + p.block_b;
  return spec;
}

std::string render_generator_spec(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  std::ostringstream os;
  os << to_string(spec.family) << ':';
  if (spec.family == Family::planted_cut) {
    os << "a=" << p.block_a << ",b=" << p.block_b << ",inter=" << p.inter_total;
    if (p.intra_weight != 0) os << ",intra=" << p.intra_weight;
    return os.str();
  }
  os << "n=" << p.n << ",wmin=" << p.weight_min << ",wmax=" << p.weight_max;
  if (spec.family == Family::random_connected) os << ",p=" << p.edge_probability;
  return os.str();
}

Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (spec.family) {
    case Family::complete: return make_complete(spec.params, rng);
    case Family::cycle: return make_cycle(spec.params, rng);
    case Family::path: return make_path(spec.params, rng);
    case Family::random_connected: return make_random_connected(spec.params, rng);
    case Family::planted_cut: return make_planted_cut(spec.params, rng);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace dmincut
