#ifndef CERTREC_PATTERNS_HPP
#define CERTREC_PATTERNS_HPP

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "certrec/check.hpp"
#include "certrec/graph.hpp"

namespace certrec {

enum class Pair : unsigned char { edge, non_edge, any };

/// Ordered pattern on a <σ b <σ c. "any" leaves the pair unconstrained.
struct TriplePattern {
  std::string_view name;
  Pair ab;
  Pair bc;
  Pair ac;

  static constexpr bool holds(Pair want, bool present) {
    return want == Pair::any || (want == Pair::edge) == present;
  }
  constexpr bool matches(bool ab_edge, bool bc_edge, bool ac_edge) const {
    return holds(ab, ab_edge) && holds(bc, bc_edge) && holds(ac, ac_edge);
  }
  constexpr bool same_shape(const TriplePattern& o) const { return ab == o.ab && bc == o.bc && ac == o.ac; }
};

namespace patterns {
inline constexpr Pair E = Pair::edge, N = Pair::non_edge, F = Pair::any;
//                                        ab  bc  ac
inline constexpr TriplePattern cocomp{"COCOMP", N, N, E};
inline constexpr TriplePattern star{"STAR", E, F, F};
inline constexpr TriplePattern split{"SPLIT", E, N, F};
inline constexpr TriplePattern chain1{"CHAIN1", E, E, F};
inline constexpr TriplePattern chain2{"CHAIN2", N, E, N};
inline constexpr TriplePattern tpg1{"TPG1", E, E, N};
inline constexpr TriplePattern tpg2{"TPG2", N, E, E};
inline constexpr TriplePattern interval1{"INTERVAL1", N, E, E};
inline constexpr TriplePattern interval2{"INTERVAL2", N, N, E};
inline constexpr TriplePattern chordal{"CHORDAL", N, E, E};
inline constexpr TriplePattern cochordal{"COCHORDAL", E, N, E};
inline constexpr TriplePattern cocomparability{"COCOMPARABILITY", N, N, E};

inline constexpr std::array<TriplePattern, 12> catalog{cocomp, star,      split,     chain1,  chain2,
                                                       tpg1,   tpg2,      interval1, interval2, chordal,
                                                       cochordal, cocomparability};
}  // namespace patterns

class UnknownPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const TriplePattern& pattern_by_name(std::string_view name) {
  for (const auto& p : patterns::catalog)
    if (p.name == name) return p;
  throw UnknownPattern("unknown pattern '" + std::string(name) + "'");
}

inline std::vector<TriplePattern> patterns_by_name(std::span<const std::string> names) {
  std::vector<TriplePattern> out;
  for (const auto& n : names) out.push_back(pattern_by_name(n));
  return out;
}

struct PatternViolation {
  std::string pattern;
  Vertex a = kNoVertex, b = kNoVertex, c = kNoVertex;
  friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};

using PatternCheck = Check<PatternViolation>;

/// Reference checker: every ordered triple, O(n^3). Kept deliberately naive.
inline PatternCheck avoids_bruteforce(const Graph& g, const VertexOrder& order, std::span<const TriplePattern> set) {
  const Vertex n = g.vertex_count();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k) {
        const Vertex a = order[i], b = order[j], c = order[k];
        const bool ab = g.has_edge(a, b), bc = g.has_edge(b, c), ac = g.has_edge(a, c);
        for (const auto& p : set)
          if (p.matches(ab, bc, ac)) return PatternCheck::fail({std::string(p.name), a, b, c});
      }
  return PatternCheck::pass();
}

namespace detail {

// Adjacency by position: nbr_pos[v] lists the positions of v's neighbors, ascending.
struct PositionAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> pos;

  PositionAdjacency(const Graph& g, const VertexOrder& order) {
    const Vertex n = g.vertex_count();
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex p = 0; p < n; ++p) offsets[p + 1] = offsets[p] + static_cast<std::size_t>(g.degree(order[p]));
    pos.resize(offsets.back());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // Sweeping positions in increasing order keeps every list sorted.
    for (Vertex p = 0; p < n; ++p)
      for (Vertex w : g.sorted_neighbors(order[p])) pos[cursor[order.position(w)]++] = p;
  }
  std::span<const Vertex> at(Vertex p) const { return {pos.data() + offsets[p], offsets[p + 1] - offsets[p]}; }
  std::span<const Vertex> after(Vertex p, Vertex q) const {
    auto s = at(p);
    auto it = std::upper_bound(s.begin(), s.end(), q);
    return {s.data() + (it - s.begin()), static_cast<std::size_t>(s.end() - it)};
  }
};

}  // namespace detail

/// Exact lexicographically-first violation, pruned by the constraints every
/// pattern in the set shares: when all patterns demand ab (resp. ac, bc) to be
/// an edge, only neighbors are enumerated for that pair.
inline PatternCheck first_violation(const Graph& g, const VertexOrder& order, std::span<const TriplePattern> set) {
  const Vertex n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("pattern check: order size mismatch");
  if (set.empty() || n < 3) return PatternCheck::pass();
  auto all = [&](auto pred) { return std::all_of(set.begin(), set.end(), pred); };
  const bool ab_edge = all([](const TriplePattern& p) { return p.ab == Pair::edge; });
  const bool ac_edge = all([](const TriplePattern& p) { return p.ac == Pair::edge; });
  const bool bc_edge = all([](const TriplePattern& p) { return p.bc == Pair::edge; });

  detail::PositionAdjacency adj(g, order);
  std::vector<Vertex> mark_a(static_cast<std::size_t>(n), -1), mark_b(static_cast<std::size_t>(n), -1);
  std::vector<const TriplePattern*> live;
  live.reserve(set.size());

  for (Vertex pa = 0; pa < n; ++pa) {
    auto later_a = adj.after(pa, pa);
    if (ac_edge && later_a.empty()) continue;
    for (Vertex q : adj.at(pa)) mark_a[q] = pa;
    const Vertex last_a = later_a.empty() ? -1 : later_a.back();

    auto try_b = [&](Vertex pb) -> std::optional<PatternViolation> {
      const bool ab = mark_a[pb] == pa;
      live.clear();
      for (const auto& p : set)
        if (TriplePattern::holds(p.ab, ab)) live.push_back(&p);
      if (live.empty()) return std::nullopt;
      for (Vertex q : adj.at(pb)) mark_b[q] = pb;
      auto test_c = [&](Vertex pc) -> const TriplePattern* {
        const bool ac = mark_a[pc] == pa, bc = mark_b[pc] == pb;
        for (const auto* p : live)
          if (TriplePattern::holds(p->bc, bc) && TriplePattern::holds(p->ac, ac)) return p;
        return nullptr;
      };
      auto report = [&](const TriplePattern* p, Vertex pc) {
        return PatternViolation{std::string(p->name), order[pa], order[pb], order[pc]};
      };
      if (ac_edge) {
        for (Vertex pc : adj.after(pa, pb))
          if (auto* p = test_c(pc)) return report(p, pc);
      } else if (bc_edge) {
        for (Vertex pc : adj.after(pb, pb))
          if (auto* p = test_c(pc)) return report(p, pc);
      } else {
        for (Vertex pc = pb + 1; pc < n; ++pc)
          if (auto* p = test_c(pc)) return report(p, pc);
      }
      return std::nullopt;
    };

    if (ab_edge) {
      for (Vertex pb : later_a) {
        if (ac_edge && pb >= last_a) break;
        if (auto v = try_b(pb)) return PatternCheck::fail(std::move(*v));
      }
    } else {
      const Vertex stop = ac_edge ? last_a : n;
      for (Vertex pb = pa + 1; pb < stop; ++pb)
        if (auto v = try_b(pb)) return PatternCheck::fail(std::move(*v));
    }
  }
  return PatternCheck::pass();
}

/// Earlier neighbors u, w of v that are not adjacent.
struct SimplicialWitness {
  Vertex vertex = kNoVertex, u = kNoVertex, w = kNoVertex;
};

/// Every vertex's earlier neighbors form a clique (equivalently: avoids CHORDAL).
/// Linear: only the latest earlier neighbor p of v has to see the others.
inline Check<SimplicialWitness> is_simplicial_elimination(const Graph& g, const VertexOrder& order) {
  const Vertex n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("simplicial check: order size mismatch");
  std::vector<Vertex> latest(static_cast<std::size_t>(n), kNoVertex);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> demands(static_cast<std::size_t>(n));  // (v, u) at p
  for (Vertex v = 0; v < n; ++v) {
    const Vertex pv = order.position(v);
    for (Vertex w : g.sorted_neighbors(v))
      if (order.position(w) < pv && (latest[v] == kNoVertex || order.position(w) > order.position(latest[v])))
        latest[v] = w;
    if (latest[v] == kNoVertex) continue;
    for (Vertex w : g.sorted_neighbors(v))
      if (w != latest[v] && order.position(w) < pv) demands[latest[v]].emplace_back(v, w);
  }
  std::vector<Vertex> mark(static_cast<std::size_t>(n), kNoVertex);
  for (Vertex p = 0; p < n; ++p) {
    if (demands[p].empty()) continue;
    for (Vertex w : g.sorted_neighbors(p)) mark[w] = p;
    for (auto [v, u] : demands[p])
      if (mark[u] != p) return Check<SimplicialWitness>::fail({v, u, p});
  }
  return Check<SimplicialWitness>::pass();
}

/// Every closed neighborhood occupies consecutive positions. Linear.
inline bool has_consecutive_neighborhoods(const Graph& g, const VertexOrder& order) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex lo = order.position(v), hi = lo;
    for (Vertex w : g.sorted_neighbors(v)) {
      lo = std::min(lo, order.position(w));
      hi = std::max(hi, order.position(w));
    }
    if (hi - lo != g.degree(v)) return false;
  }
  return true;
}

namespace detail {

// Avoiding {TPG1, TPG2} means: for every edge bc with b <σ c, the earlier
// neighbors of b are exactly the neighbors of c placed before b. Equivalently
// each vertex's earlier neighbors are its ancestors in the forest that links a
// vertex to its latest earlier neighbor.
inline bool avoids_tpg_pair(const Graph& g, const VertexOrder& order) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> up(static_cast<std::size_t>(n), kNoVertex), earlier(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.sorted_neighbors(v))
      if (order.before(w, v)) {
        ++earlier[v];
        if (up[v] == kNoVertex || order.before(up[v], w)) up[v] = w;
      }
  // Parents precede children, so one sweep in order assigns depths.
  std::vector<Vertex> depth(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  for (Vertex v : order)
    if (up[v] != kNoVertex) {
      depth[v] = depth[up[v]] + 1;
      children[up[v]].push_back(v);
    }
  for (Vertex v = 0; v < n; ++v)
    if (depth[v] != earlier[v]) return false;
  std::vector<Vertex> tin(static_cast<std::size_t>(n)), tout(static_cast<std::size_t>(n));
  Vertex clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex r : order) {
    if (up[r] != kNoVertex) continue;
    stack.emplace_back(r, 0);
    tin[r] = clock++;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < children[u].size()) {
        Vertex c = children[u][i++];
        tin[c] = clock++;
        stack.emplace_back(c, 0);
      } else {
        tout[u] = clock;
        stack.pop_back();
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.sorted_neighbors(v))
      if (order.before(w, v) && !(tin[w] <= tin[v] && tin[v] < tout[w])) return false;
  return true;
}

inline bool split_fast(const Graph& g, const VertexOrder& order) {
  // SPLIT: ab ∈ E, bc ∉ E. Any vertex b with an earlier neighbor must be
  // adjacent to everything after it.
  const Vertex n = g.vertex_count();
  for (Vertex b = 0; b < n; ++b) {
    Vertex earlier = 0, later = 0;
    for (Vertex w : g.sorted_neighbors(b)) (order.before(w, b) ? earlier : later) += 1;
    if (earlier > 0 && later != n - 1 - order.position(b)) return false;
  }
  return true;
}

inline bool star_fast(const Graph& g, const VertexOrder& order) {
  // STAR: ab ∈ E with anything after b. Every edge must end at the last position.
  const Vertex last = g.vertex_count() - 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.sorted_neighbors(v))
      if (order.position(v) != last && order.position(w) != last) return false;
  return true;
}

enum class FastPath { none, star, split, chordal, cochordal, bisimplicial, left_right, tpg };

inline FastPath classify(std::span<const TriplePattern> set) {
  std::vector<TriplePattern> shapes;
  for (const auto& p : set)
    if (std::none_of(shapes.begin(), shapes.end(), [&](const TriplePattern& q) { return q.same_shape(p); }))
      shapes.push_back(p);
  auto is = [&](std::initializer_list<TriplePattern> want) {
    if (want.size() != shapes.size()) return false;
    for (const auto& w : want)
      if (std::none_of(shapes.begin(), shapes.end(), [&](const TriplePattern& q) { return q.same_shape(w); }))
        return false;
    return true;
  };
  using namespace patterns;
  if (is({star})) return FastPath::star;
  if (is({split})) return FastPath::split;
  if (is({chordal})) return FastPath::chordal;
  if (is({cochordal})) return FastPath::cochordal;
  if (is({chordal, cochordal})) return FastPath::bisimplicial;
  if (is({chordal, cochordal, cocomparability})) return FastPath::left_right;
  if (is({tpg1, tpg2})) return FastPath::tpg;
  return FastPath::none;
}

}  // namespace detail

/// Pattern avoidance. Named families are decided in O(n + m) and only a
/// failure pays for the exact first-violation scan; others go straight to the
/// scan. The reported violation is always the lexicographically first one.
inline PatternCheck avoids(const Graph& g, const VertexOrder& order, std::span<const TriplePattern> set) {
  if (order.size() != g.vertex_count()) throw std::invalid_argument("avoids: order size mismatch");
  bool pass = false;
  switch (detail::classify(set)) {
    case detail::FastPath::star: pass = detail::star_fast(g, order); break;
    case detail::FastPath::split: pass = detail::split_fast(g, order); break;
    case detail::FastPath::chordal: pass = is_simplicial_elimination(g, order).passed(); break;
    case detail::FastPath::cochordal: pass = is_simplicial_elimination(g, order.reversed()).passed(); break;
    case detail::FastPath::bisimplicial:
      pass = is_simplicial_elimination(g, order).passed() && is_simplicial_elimination(g, order.reversed()).passed();
      break;
    case detail::FastPath::left_right: pass = has_consecutive_neighborhoods(g, order); break;
    case detail::FastPath::tpg: pass = detail::avoids_tpg_pair(g, order); break;
    case detail::FastPath::none: return first_violation(g, order, set);
  }
  return pass ? PatternCheck::pass() : first_violation(g, order, set);
}

inline PatternCheck avoids(const Graph& g, const VertexOrder& order, std::initializer_list<TriplePattern> set) {
  return avoids(g, order, std::span<const TriplePattern>(set.begin(), set.size()));
}

inline PatternCheck avoids(const Graph& g, const VertexOrder& order, std::span<const std::string> names) {
  auto set = patterns_by_name(names);
  return avoids(g, order, set);
}

/// The ordering and its mirror are both simplicial elimination orderings.
inline PatternCheck is_bisimplicial(const Graph& g, const VertexOrder& order) {
  return avoids(g, order, {patterns::chordal, patterns::cochordal});
}

/// An induced P3 a-b-c (center b) whose center is not between its ends.
struct P3Witness {
  Vertex end1 = kNoVertex, center = kNoVertex, end2 = kNoVertex;
};

/// Every induced P3 has its center between its ends. Checked directly on the
/// P3s, O(sum of squared degrees).
inline Check<P3Witness> is_indifference(const Graph& g, const VertexOrder& order) {
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    auto nb = g.sorted_neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i], c = nb[j];
        if (g.has_edge(a, c)) continue;
        const bool between = (order.before(a, b) && order.before(b, c)) || (order.before(c, b) && order.before(b, a));
        if (!between) return Check<P3Witness>::fail({a, b, c});
      }
  }
  return Check<P3Witness>::pass();
}

}  // namespace certrec

#endif  // CERTREC_PATTERNS_HPP
