#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dmincut/graph.hpp"
#include "dmincut/node.hpp"
#include "dmincut/rank.hpp"

namespace dmincut {

/// Two-sided vertex partition, `side[v - 1]` in {0, 1}. Normalized so that
/// vertex 1 is on side 0.
struct Bipartition {
  std::vector<std::uint8_t> side;

  std::uint8_t of(VertexId v) const { return side.at(v - 1); }
  void normalize();

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

inline constexpr VertexId kBruteForceMaxVertices = 16;

struct BruteForceCut {
  Weight value = 0;
  Bipartition witness;        // first minimum in enumeration order
  std::size_t minimal_count = 0;  // bipartitions attaining the minimum
};

/// Exact global min cut by enumerating all 2^(n-1) - 1 bipartitions.
/// Throws std::invalid_argument for n > kBruteForceMaxVertices or n < 2.
BruteForceCut brute_force_mincut(const Graph& g);

/// Exact global min-cut value by Stoer-Wagner maximum adjacency search.
Weight stoer_wagner_mincut(const Graph& g);

/// Sum of weights of edges crossing `p`. Throws std::invalid_argument if a
/// side is empty or `p` has the wrong size.
Weight partition_cut_weight(const Graph& g, const Bipartition& p);

/// Yields the rank value of active edge (hi, lo) in the given iteration. It
/// is called once per active edge per iteration, iterations in order and
/// edges in ascending (hi, lo) order within an iteration.
using RankSchedule =
    std::function<std::uint64_t(std::uint32_t iteration, VertexId hi, VertexId lo)>;

/// The per-node streams the distributed protocol draws from for one attempt
/// of one trial, packaged as a schedule.
RankSchedule stream_rank_schedule(const Graph& g, std::uint64_t seed, std::uint32_t trial,
                                  std::uint32_t attempt, int k = 5);

struct SequentialTrial {
  Weight value = 0;
  Bipartition partition;
  std::vector<ContractionEvent> contractions;
  std::uint32_t iterations = 0;
  bool collision = false;  // two active edges drew the same value
};

/// Centralized contraction: each iteration ranks every edge that joins two
/// distinct groups and contracts the maximum, until two groups remain. The
/// final iteration draws ranks too, mirroring the protocol's last round.
/// Stops early with `collision` set if two values collide.
SequentialTrial sequential_karger_trial(const Graph& g, const RankSchedule& schedule);

}  // namespace dmincut
