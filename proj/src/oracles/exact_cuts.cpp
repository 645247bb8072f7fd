#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dmincut/oracles.hpp"

namespace dmincut {

void Bipartition::normalize() {
  if (!side.empty() && side.front() != 0) {
    for (auto& s : side) s ^= 1;
  }
}

Weight partition_cut_weight(const Graph& g, const Bipartition& p) {
  if (p.side.size() != g.n()) throw std::invalid_argument("bipartition size does not match graph");
  auto ones = std::count(p.side.begin(), p.side.end(), std::uint8_t{1});
  if (ones == 0 || ones == static_cast<std::ptrdiff_t>(p.side.size())) {
    throw std::invalid_argument("bipartition has an empty side");
  }
  Weight total = 0;
  for (const auto& e : g.edges()) {
    if (p.of(e.u) != p.of(e.v)) total += e.w;
  }
  return total;
}

BruteForceCut brute_force_mincut(const Graph& g) {
  const VertexId n = g.n();
  if (n < 2) throw std::invalid_argument("brute-force min cut needs n >= 2");
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute-force min cut limited to n <= 16");
  }

  // Vertex 1 stays on side 0; bit i of the mask places vertex i + 2.
  const std::uint32_t limit = 1u << (n - 1);
  BruteForceCut best;
  best.value = std::numeric_limits<Weight>::max();
  std::uint32_t best_mask = 0;
  auto side_of = [](std::uint32_t mask, VertexId v) -> std::uint32_t {
    return v == 1 ? 0u : (mask >> (v - 2)) & 1u;
  };
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    Weight cut = 0;
    for (const auto& e : g.edges()) {
      if (side_of(mask, e.u) != side_of(mask, e.v)) cut += e.w;
    }
    if (cut < best.value) {
      best.value = cut;
      best.minimal_count = 1;
      best_mask = mask;
    } else if (cut == best.value) {
      ++best.minimal_count;
    }
  }
  best.witness.side.resize(n);
  for (VertexId v = 1; v <= n; ++v) {
    best.witness.side[v - 1] = static_cast<std::uint8_t>(side_of(best_mask, v));
  }
  return best;
}

Weight stoer_wagner_mincut(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw std::invalid_argument("Stoer-Wagner needs n >= 2");

  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const auto& e : g.edges()) {
    w[e.u - 1][e.v - 1] += e.w;
    w[e.v - 1][e.u - 1] += e.w;
  }

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  Weight best = std::numeric_limits<Weight>::max();

  std::vector<Weight> key(n);
  std::vector<bool> added(n);
  while (alive.size() > 1) {
    // Maximum adjacency ordering over the merged vertices.
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), false);
    std::size_t prev = alive.front();
    std::size_t last = alive.front();
    for (std::size_t round = 0; round < alive.size(); ++round) {
      std::size_t pick = n;
      for (std::size_t v : alive) {
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      for (std::size_t v : alive) {
        if (!added[v]) key[v] += w[pick][v];
      }
    }
    best = std::min(best, key[last]);  // cut of the phase: last vs. the rest

    for (std::size_t v : alive) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return best;
}

}  // namespace dmincut
