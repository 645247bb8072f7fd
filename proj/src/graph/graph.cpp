#include "dmincut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace dmincut {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::malformed_line: return "malformed line";
    case ViolationKind::edge_count_mismatch: return "edge count mismatch";
    case ViolationKind::vertex_out_of_range: return "vertex id out of range";
    case ViolationKind::self_loop: return "self-loop";
    case ViolationKind::duplicate_edge: return "duplicate edge";
    case ViolationKind::non_positive_weight: return "non-positive weight";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::empty_graph: return "empty graph";
  }
  return "unknown";
}

GraphError::GraphError(ViolationKind kind, const std::string& what,
                       std::vector<Violation> all)
    : std::runtime_error(what), kind_(kind), all_(std::move(all)) {}

Graph::Graph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n) + 1) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    bool in_range = e.u >= 1 && e.v <= n_;
    if (!in_range || e.u == e.v) continue;
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
  }
  for (auto& list : adjacency_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

Graph Graph::checked(VertexId n, std::vector<Edge> edges) {
  Graph g(n, std::move(edges));
  auto violations = validate(g);
  if (!violations.empty()) {
    auto first = violations.front();
    throw GraphError(first.kind,
                     std::string(to_string(first.kind)) + ": " + first.detail,
                     std::move(violations));
  }
  return g;
}

std::span<const Neighbor> Graph::neighbors(VertexId u) const {
  if (u < 1 || u > n_) return {};
  return adjacency_[u];
}

std::optional<Weight> Graph::weight(VertexId u, VertexId v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, VertexId id) { return a.id < id; });
  if (it == list.end() || it->id != v) return std::nullopt;
  return it->weight;
}

Weight Graph::total_weight() const noexcept {
  return std::accumulate(edges_.begin(), edges_.end(), Weight{0},
                         [](Weight acc, const Edge& e) { return acc + e.w; });
}

std::vector<Edge> Graph::canonical_edges() const {
  std::vector<Edge> sorted = edges_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return sorted;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.canonical_edges() == b.canonical_edges();
}

namespace {

std::string edge_label(const Edge& e) {
  std::ostringstream os;
  os << '(' << e.u << ',' << e.v << ')';
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const Graph& g) {
  std::vector<Violation> out;
  if (g.n() == 0 || g.m() == 0) {
    out.push_back({ViolationKind::empty_graph, "graph needs n >= 1 and m >= 1"});
    return out;
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : g.edges()) {
    if (e.u < 1 || e.v > g.n()) {
      out.push_back({ViolationKind::vertex_out_of_range, edge_label(e)});
      continue;
    }
    if (e.u == e.v) {
      out.push_back({ViolationKind::self_loop, edge_label(e)});
      continue;
    }
    if (!seen.emplace(e.u, e.v).second) {
      out.push_back({ViolationKind::duplicate_edge, edge_label(e)});
    }
    if (e.w <= 0) {
      out.push_back({ViolationKind::non_positive_weight, edge_label(e)});
    }
  }

  // BFS from vertex 1 over in-range edges.
  std::vector<bool> reached(static_cast<std::size_t>(g.n()) + 1, false);
  std::vector<VertexId> frontier{1};
  reached[1] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    VertexId u = frontier.back();
    frontier.pop_back();
    for (const auto& nb : g.neighbors(u)) {
      if (!reached[nb.id]) {
        reached[nb.id] = true;
        ++count;
        frontier.push_back(nb.id);
      }
    }
  }
  if (count != g.n()) {
    std::ostringstream os;
    os << count << " of " << g.n() << " vertices reachable from vertex 1";
    out.push_back({ViolationKind::disconnected, os.str()});
  }
  return out;
}

}  // namespace dmincut
