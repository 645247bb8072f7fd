#include "dmincut/rank.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dmincut {

std::string to_string(const Rank& r) {
  if (r.is_null()) return "0";
  std::ostringstream os;
  os << r.value << '@' << r.hi << '-' << r.lo;
  return os.str();
}

std::string to_string(const GroupId& g) {
  if (g.value == 0) return "v" + std::to_string(g.hi);
  std::ostringstream os;
  os << g.value << '@' << g.hi << '-' << g.lo;
  return os.str();
}

std::uint64_t rank_range(std::uint64_t m, int k) {
  if (k < 5) throw std::invalid_argument("rank exponent k must be >= 5");
  if (m == 0) throw std::invalid_argument("rank range needs m >= 1");
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / m) {
      throw std::invalid_argument("m^k does not fit in 64 bits; lower k or use a smaller graph");
    }
    out *= m;
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t rank_stream_seed(std::uint64_t experiment_seed, std::uint64_t trial,
                               std::uint32_t attempt, VertexId node) {
  std::uint64_t h = splitmix64(experiment_seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(attempt) << 32 | node));
  return h;
}

}  // namespace dmincut
