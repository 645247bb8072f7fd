#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "dmincut/graph.hpp"

namespace dmincut {

namespace {

[[noreturn]] void fail(ViolationKind kind, std::size_t line_no, const std::string& msg) {
  std::ostringstream os;
  os << to_string(kind) << " at line " << line_no << ": " << msg;
  throw GraphError(kind, os.str());
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

// Accepts "w" or "p/q"; result is w * denominator and must be integral.
bool parse_weight(std::string_view token, Weight denominator, Weight& out) {
  auto slash = token.find('/');
  Weight num = 0;
  Weight den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_number(token, num)) return false;
  } else {
    if (!parse_number(token.substr(0, slash), num)) return false;
    if (!parse_number(token.substr(slash + 1), den) || den <= 0) return false;
  }
  Weight scaled = 0;
  if (__builtin_mul_overflow(num, denominator, &scaled)) return false;
  if (scaled % den != 0) return false;
  out = scaled / den;
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  if (options.denominator <= 0) {
    throw std::invalid_argument("denominator must be positive");
  }
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  VertexId n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2 || !parse_number(tokens[0], n) || !parse_number(tokens[1], m)) {
        fail(ViolationKind::malformed_line, line_no, "expected header \"n m\"");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }

    Edge e;
    if (tokens.size() != 3 || !parse_number(tokens[0], e.u) || !parse_number(tokens[1], e.v)) {
      fail(ViolationKind::malformed_line, line_no, "expected \"u v w\"");
    }
    if (!parse_weight(tokens[2], options.denominator, e.w)) {
      fail(ViolationKind::malformed_line, line_no,
           "weight is not an integer multiple of 1/denominator");
    }
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      fail(ViolationKind::vertex_out_of_range, line_no, "vertex ids must lie in 1..n");
    }
    if (e.u == e.v) fail(ViolationKind::self_loop, line_no, "u == v");
    if (e.w <= 0) fail(ViolationKind::non_positive_weight, line_no, "weights must be > 0");
    edges.push_back(e);
  }

  if (!have_header) fail(ViolationKind::empty_graph, line_no, "missing header");
  if (edges.size() != m) {
    std::ostringstream os;
    os << "header declares " << m << " edges, found " << edges.size();
    fail(ViolationKind::edge_count_mismatch, line_no, os.str());
  }
  return Graph::checked(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Graph load_edge_list(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_edge_list(in, options);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.canonical_edges()) {
    os << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
  return os.str();
}

}  // namespace dmincut
