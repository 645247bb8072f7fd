#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>

#include "dmincut/graph.hpp"

namespace dmincut {

/// Per-iteration random label of an edge.
///
/// Ordered by value first, then by (higher endpoint, lower endpoint), so two
/// distinct edges never compare equal even when their values collide. The
/// default-constructed rank (value 0) is the rank of a contracted edge and
/// sorts below every drawn rank.
struct Rank {
  std::uint64_t value = 0;
  VertexId hi = 0;
  VertexId lo = 0;

  bool is_null() const noexcept { return value == 0; }

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

std::string to_string(const Rank& r);

/// Group label. A fresh vertex is its own group; a merged group is named by
/// the rank of the edge whose contraction created it. Singletons carry
/// value 0, which no drawn rank has, so the two kinds never alias.
struct GroupId {
  std::uint64_t value = 0;
  VertexId hi = 0;
  VertexId lo = 0;

  static GroupId singleton(VertexId u) noexcept { return {0, u, 0}; }
  static GroupId from_rank(const Rank& r) noexcept { return {r.value, r.hi, r.lo}; }

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

std::string to_string(const GroupId& g);

/// m^k, the size of the rank value range. Throws std::invalid_argument when
/// k < 5 or the range does not fit in 64 bits.
std::uint64_t rank_range(std::uint64_t m, int k);

/// Mixes (experiment seed, trial, attempt, node) into one stream seed.
std::uint64_t rank_stream_seed(std::uint64_t experiment_seed, std::uint64_t trial,
                               std::uint32_t attempt, VertexId node);

/// One node's deterministic source of rank values, uniform in 1..range.
class RankStream {
 public:
  RankStream() = default;
  RankStream(std::uint64_t seed, std::uint64_t range) : engine_(seed), dist_(1, range) {}

  std::uint64_t operator()() { return dist_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<std::uint64_t> dist_{1, 1};
};

}  // namespace dmincut
