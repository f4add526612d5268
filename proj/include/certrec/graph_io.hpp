#ifndef CERTREC_GRAPH_IO_HPP
#define CERTREC_GRAPH_IO_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "certrec/graph.hpp"

namespace certrec {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: a header line "n m", then m lines "u v" (0-based). Lines whose
// first non-blank character is '#' and blank lines are ignored.
inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::unordered_set<unsigned long long> seen;
  auto parse_pair = [&](const std::string& text, long long& x, long long& y) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> x >> y)) throw ParseError(lineno, "expected two integers, got '" + text + "'");
    if (ss >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      parse_pair(line, n, m);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
      if (n > 0x7fffffffLL) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min(m, 1LL << 24)));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
    long long u = 0, v = 0;
    parse_pair(line, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw ParseError(lineno, "self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    const auto key = (static_cast<unsigned long long>(std::min(u, v)) << 32) | static_cast<unsigned long long>(std::max(u, v));
    if (!seen.insert(key).second)
      throw ParseError(lineno, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(lineno, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(lineno, e.what());
  }
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace certrec

#endif  // CERTREC_GRAPH_IO_HPP
