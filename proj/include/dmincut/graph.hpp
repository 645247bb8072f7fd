#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmincut {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

/// Undirected weighted edge. Canonical edges have u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId id = 0;
  Weight weight = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

enum class ViolationKind {
  malformed_line,
  edge_count_mismatch,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  non_positive_weight,
  disconnected,
  empty_graph,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Raised by the checked constructors and the parser. Carries the first
/// violation found; `violations()` has all of them when validation ran.
class GraphError : public std::runtime_error {
 public:
  GraphError(ViolationKind kind, const std::string& what,
             std::vector<Violation> all = {});

  ViolationKind kind() const noexcept { return kind_; }
  const std::vector<Violation>& violations() const noexcept { return all_; }

 private:
  ViolationKind kind_;
  std::vector<Violation> all_;
};

/// Immutable weighted undirected graph over vertex ids 1..n.
///
/// The raw constructor does not enforce the graph invariants so that
/// `validate` can report on malformed inputs; `Graph::checked` and the
/// edge-list parser reject anything `validate` complains about.
class Graph {
 public:
  Graph() = default;
  Graph(VertexId n, std::vector<Edge> edges);

  static Graph checked(VertexId n, std::vector<Edge> edges);

  VertexId n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  /// Edges in insertion order, endpoints normalized to u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbors of `u` sorted by id. Empty for ids outside 1..n.
  std::span<const Neighbor> neighbors(VertexId u) const;

  std::size_t degree(VertexId u) const { return neighbors(u).size(); }

  std::optional<Weight> weight(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return weight(u, v).has_value(); }

  Weight total_weight() const noexcept;

  /// Edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> canonical_edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;  // index 0 unused
};

/// Returns every invariant violation; empty iff `g` is a valid input graph.
std::vector<Violation> validate(const Graph& g);

struct ParseOptions {
  /// Weights may be written as `p/q`; they are stored as w * denominator,
  /// which must come out integral.
  Weight denominator = 1;
};

Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});
Graph load_edge_list(const std::string& path, const ParseOptions& options = {});

/// Canonical rendering: header line then edges sorted by endpoints.
std::string render_edge_list(const Graph& g);

}  // namespace dmincut
