#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dmincut/graph.hpp"

namespace dmincut {

enum class Family { complete, cycle, path, random_connected, planted_cut };

std::string_view to_string(Family family);

/// Family-specific generator parameters. Unused fields are ignored.
///
/// Edge weights are drawn uniformly from [weight_min, weight_max]; set both
/// equal for fixed weights. `planted_cut` builds two cliques of sizes
/// block_a and block_b with edge weight `intra_weight` (0 picks the smallest
/// weight that keeps the planted cut unique) joined by edges whose weights
/// sum to `inter_total`.
struct GeneratorParams {
  VertexId n = 0;
  Weight weight_min = 1;
  Weight weight_max = 1;
  double edge_probability = 0.3;
  VertexId block_a = 0;
  VertexId block_b = 0;
  Weight inter_total = 1;
  Weight intra_weight = 0;
};

struct GeneratorSpec {
  Family family = Family::cycle;
  GeneratorParams params;
};

/// Parses "FAMILY:key=value,..." e.g. "random-connected:n=10,p=0.4,wmax=10"
/// or "planted-cut:a=3,b=3,inter=2". Keys: n, w, wmin, wmax, p, a, b,
/// inter, intra.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string render_generator_spec(const GeneratorSpec& spec);

/// Deterministic in (spec, seed). Throws std::invalid_argument on bad params.
Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

inline Graph generate(Family family, const GeneratorParams& params, std::uint64_t seed) {
  return generate(GeneratorSpec{family, params}, seed);
}

}  // namespace dmincut
