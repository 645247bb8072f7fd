#include <algorithm>
#include <memory>
#include <set>

#include "dmincut/oracles.hpp"

namespace dmincut {

RankSchedule stream_rank_schedule(const Graph& g, std::uint64_t seed, std::uint32_t trial,
                                  std::uint32_t attempt, int k) {
  const std::uint64_t range = rank_range(g.m(), k);
  auto streams = std::make_shared<std::vector<RankStream>>();
  streams->reserve(static_cast<std::size_t>(g.n()) + 1);
  streams->emplace_back();
  for (VertexId u = 1; u <= g.n(); ++u) {
    streams->emplace_back(rank_stream_seed(seed, trial, attempt, u), range);
  }
  return [streams](std::uint32_t, VertexId hi, VertexId) { return (*streams)[hi](); };
}

SequentialTrial sequential_karger_trial(const Graph& g, const RankSchedule& schedule) {
  const VertexId n = g.n();
  std::vector<VertexId> label(static_cast<std::size_t>(n) + 1);
  for (VertexId v = 1; v <= n; ++v) label[v] = v;
  std::size_t groups = n;

  // Ascending (hi, lo), the order in which each node draws for its lower neighbors.
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(e);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.v, a.u) < std::pair(b.v, b.u);
  });

  SequentialTrial out;
  for (std::uint32_t iteration = 0;; ++iteration) {
    out.iterations = iteration + 1;
    Rank best;
    std::set<std::uint64_t> values;
    for (const auto& e : edges) {
      if (label[e.u] == label[e.v]) continue;
      Rank r{schedule(iteration, e.v, e.u), e.v, e.u};
      if (!values.insert(r.value).second) out.collision = true;
      best = std::max(best, r);
    }
    if (out.collision) return out;
    if (groups <= 2) break;

    out.contractions.push_back({best.hi, best.lo});
    const VertexId from = label[best.lo];
    const VertexId to = label[best.hi];
    for (VertexId v = 1; v <= n; ++v) {
      if (label[v] == from) label[v] = to;
    }
    --groups;
  }

  out.partition.side.resize(n);
  for (VertexId v = 1; v <= n; ++v) {
    out.partition.side[v - 1] = label[v] == label[1] ? 0 : 1;
  }
  out.value = partition_cut_weight(g, out.partition);
  return out;
}

}  // namespace dmincut
