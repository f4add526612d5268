#ifndef CERTREC_ORACLES_HPP
#define CERTREC_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "certrec/graph.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"

namespace certrec {

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Vertex kOracleCap = 12;
inline constexpr Vertex kOrderingSearchCap = 9;

enum class OracleClass { star, split, bipartite_chain, trivially_perfect, unit_interval, chordal, cocomparability };

namespace detail {

// Adjacency as bitmasks; only for the small graphs the oracles accept.
struct Dense {
  Vertex n = 0;
  std::vector<std::uint64_t> adj;

  explicit Dense(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(n), 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
  }
  bool edge(Vertex u, Vertex v) const { return (adj[u] >> v) & 1U; }
};

inline void guard(const Graph& g, Vertex cap, std::string_view what) {
  if (g.vertex_count() > cap)
    throw OracleSizeError(std::string(what) + ": " + std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                          std::to_string(cap));
}

inline bool is_bipartite(const Dense& d) {
  std::vector<int> colour(static_cast<std::size_t>(d.n), -1);
  for (Vertex s = 0; s < d.n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < d.n; ++w)
        if (d.edge(u, w)) {
          if (colour[w] < 0) {
            colour[w] = 1 - colour[u];
            stack.push_back(w);
          } else if (colour[w] == colour[u]) {
            return false;
          }
        }
    }
  }
  return true;
}

// Some subset of at least four vertices induces a chordless cycle.
inline bool has_hole(const Dense& d) {
  const std::uint64_t full = (std::uint64_t{1} << d.n) - 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (std::popcount(s) < 4) continue;
    bool two = true;
    for (std::uint64_t r = s; r && two; r &= r - 1) {
      const int v = std::countr_zero(r);
      two = std::popcount(d.adj[v] & s) == 2;
    }
    if (!two) continue;
    // 2-regular: connected iff one cycle.
    std::uint64_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t r = frontier; r; r &= r - 1) next |= d.adj[std::countr_zero(r)] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

inline bool is_split(const Dense& d) {
  const std::uint64_t full = d.n == 0 ? 0 : (std::uint64_t{1} << d.n) - 1;
  for (std::uint64_t k = 0; k <= full; ++k) {
    bool ok = true;
    for (Vertex v = 0; v < d.n && ok; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (k & bit)
        ok = ((d.adj[v] | bit) & k) == k;
      else
        ok = (d.adj[v] & ~k) == 0;
    }
    if (ok) return true;
  }
  return false;
}

inline bool has_induced(const Graph& g, const ObstructionTemplate& t) { return find_induced(g, t).has_value(); }

}  // namespace detail

/// Lexicographically first ordering avoiding the set, or none. Positions are
/// filled left to right; a prefix is extended only while it stays clean.
inline std::optional<VertexOrder> exhaustive_ordering_search(const Graph& g, std::span<const TriplePattern> set,
                                                            Vertex cap = kOrderingSearchCap) {
  detail::guard(g, cap, "exhaustive_ordering_search");
  const Vertex n = g.vertex_count();
  detail::Dense d(g);
  std::vector<Vertex> prefix;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto clean_with = [&](Vertex c) {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      for (std::size_t j = i + 1; j < prefix.size(); ++j) {
        const Vertex a = prefix[i], b = prefix[j];
        for (const auto& p : set)
          if (p.matches(d.edge(a, b), d.edge(b, c), d.edge(a, c))) return false;
      }
    return true;
  };
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<Vertex>(prefix.size()) == n) return true;
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || !clean_with(c)) continue;
      used[c] = 1;
      prefix.push_back(c);
      if (self(self)) return true;
      prefix.pop_back();
      used[c] = 0;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return VertexOrder(prefix);
}

inline std::optional<VertexOrder> exhaustive_ordering_search(const Graph& g, std::initializer_list<TriplePattern> set,
                                                            Vertex cap = kOrderingSearchCap) {
  return exhaustive_ordering_search(g, std::span<const TriplePattern>(set.begin(), set.size()), cap);
}

/// Ground truth from the forbidden-subgraph and definitional characterizations.
inline bool oracle_membership(const Graph& g, OracleClass cls, Vertex cap = kOracleCap) {
  detail::guard(g, cap, "oracle_membership");
  if (g.vertex_count() > 63) throw OracleSizeError("oracle_membership: at most 63 vertices are supported");
  const detail::Dense d(g);
  switch (cls) {
    case OracleClass::star: {
      if (g.edge_count() == 0) return true;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (static_cast<std::size_t>(g.degree(v)) == g.edge_count()) return true;
      return false;
    }
    case OracleClass::split: return detail::is_split(d);
    case OracleClass::bipartite_chain:
      return detail::is_bipartite(d) && !detail::has_induced(g, obstruction::two_k2());
    case OracleClass::trivially_perfect:
      return !detail::has_induced(g, obstruction::p4()) && !detail::has_induced(g, obstruction::c4());
    case OracleClass::chordal: return !detail::has_hole(d);
    case OracleClass::unit_interval:
      return !detail::has_hole(d) && !detail::has_induced(g, obstruction::claw()) &&
             !detail::has_induced(g, obstruction::net()) && !detail::has_induced(g, obstruction::sun3());
    case OracleClass::cocomparability:
      return exhaustive_ordering_search(g, {patterns::cocomp}, std::min(cap, kOrderingSearchCap)).has_value();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Seeded generators

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  /// True with probability p (p clamped to [0, 1]); 32-bit resolution.
  bool chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return (next() >> 32) < static_cast<std::uint64_t>(p * 4294967296.0);
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Closed unit intervals [l, l + unit] on a scaled integer line.
struct IntervalRealizer {
  std::int64_t unit = 1000;
  std::vector<std::int64_t> left;

  /// uv is an edge iff |l_u - l_v| <= unit. Sort-and-sweep, O(n log n + m).
  Graph graph() const {
    const auto n = static_cast<Vertex>(left.size());
    std::vector<Vertex> by(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) by[i] = i;
    std::sort(by.begin(), by.end(), [&](Vertex a, Vertex b) { return left[a] < left[b] || (left[a] == left[b] && a < b); });
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n && left[by[j]] - left[by[i]] <= unit; ++j) edges.emplace_back(by[i], by[j]);
    return Graph(n, edges);
  }
};

struct GeneratedUig {
  Graph graph;
  IntervalRealizer realizer;
};

/// n random left endpoints. `density` is the probability that two vertices
/// are adjacent: endpoints are drawn from [0, S] with 1 - (1 - unit/S)^2 = density.
inline GeneratedUig generate_uig(Vertex n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_uig: n must be at least 1");
  if (!(density > 0 && density <= 1)) throw std::invalid_argument("generate_uig: density must be in (0, 1]");
  Rng rng(seed);
  IntervalRealizer r;
  const double span = static_cast<double>(r.unit) / (1.0 - std::sqrt(1.0 - density));
  const auto hi = static_cast<std::int64_t>(std::min(span, 4.0e18));
  r.left.resize(static_cast<std::size_t>(n));
  for (auto& l : r.left) l = rng.between(0, hi);
  Graph g = r.graph();
  return {std::move(g), std::move(r)};
}

inline GeneratedUig uig_from_endpoints(std::vector<std::int64_t> left, std::int64_t unit = 1) {
  IntervalRealizer r{unit, std::move(left)};
  Graph g = r.graph();
  return {std::move(g), std::move(r)};
}

// Construction rules of trivially perfect graphs.
inline Graph tpg_single() { return Graph(1, {}); }

inline Graph tpg_disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

/// Adds vertex n adjacent to everything.
inline Graph tpg_add_universal(const Graph& g) {
  auto edges = g.edges();
  for (Vertex v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, g.vertex_count());
  return Graph(g.vertex_count() + 1, edges);
}

/// Comparability graph of a random rooted forest of depth at most max_depth:
/// each subtree is a universal vertex over the disjoint union of its child
/// subtrees. Every vertex sees its ancestors only, so m <= max_depth * n.
inline Graph generate_tpg(Vertex n, std::uint64_t seed, Vertex max_depth = 4, double root_chance = 0.02) {
  if (n < 1) throw std::invalid_argument("generate_tpg: n must be at least 1");
  if (max_depth < 0) throw std::invalid_argument("generate_tpg: max_depth must be nonnegative");
  Rng rng(seed);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoVertex), depth(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> open;  // vertices that may still take children
  for (Vertex v = 0; v < n; ++v) {
    if (!open.empty() && !rng.chance(root_chance)) {
      parent[v] = open[rng.below(open.size())];
      depth[v] = depth[parent[v]] + 1;
    }
    if (depth[v] < max_depth) open.push_back(v);
  }
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  rng.shuffle(label);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex a = parent[v]; a != kNoVertex; a = parent[a]) edges.emplace_back(label[v], label[a]);
  return Graph(n, edges);
}

/// A = 0..a-1, B = a..a+b-1; a_i sees the last k_i vertices of B with
/// k non-increasing, so N(a_0) ⊇ N(a_1) ⊇ ... `full` takes k_i = b - i.
inline Graph generate_bipartite_chain(Vertex a, Vertex b, std::uint64_t seed, bool full = false) {
  if (a < 0 || b < 0) throw std::invalid_argument("generate_bipartite_chain: sizes must be nonnegative");
  Rng rng(seed);
  std::vector<Vertex> k(static_cast<std::size_t>(a));
  for (Vertex i = 0; i < a; ++i) k[i] = full ? std::max<Vertex>(b - i, 0) : static_cast<Vertex>(rng.between(0, b));
  std::sort(k.begin(), k.end(), std::greater<>());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = b - k[i]; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

/// G(n, p).
inline Graph generate_random(Vertex n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("generate_random: n must be nonnegative");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Graph number `code` on n vertices: bit i of code decides the i-th pair
/// (u, v), u < v, in lexicographic order.
inline Graph graph_from_code(Vertex n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace certrec

#endif  // CERTREC_ORACLES_HPP
