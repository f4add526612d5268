#ifndef CERTREC_STRUCTURE_HPP
#define CERTREC_STRUCTURE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certrec/check.hpp"
#include "certrec/graph.hpp"
#include "certrec/oracles.hpp"
#include "certrec/patterns.hpp"

namespace certrec {

inline constexpr Vertex kModuleCap = 15;
inline constexpr Vertex kEnumerationCap = 9;

namespace detail {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline bool is_module(const std::vector<Mask>& adj, Mask within, Mask m) {
  for (Mask r = within & ~m; r; r &= r - 1) {
    const Mask seen = adj[std::countr_zero(r)] & m;
    if (seen != 0 && seen != m) return false;
  }
  return true;
}

inline VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

// Connected pieces of `within` under adjacency `adj` (or its complement).
inline std::vector<Mask> pieces(const std::vector<Mask>& adj, Mask within, bool complement) {
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    Mask seen = left & (~left + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) {
        const int v = std::countr_zero(r);
        next |= complement ? (~adj[v] & within & ~(Mask{1} << v)) : (adj[v] & within);
      }
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

}  // namespace detail

/// Every module M with 1 < |M| < n, by increasing bitmask of members.
inline std::vector<VertexSet> modules_bruteforce(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > kModuleCap) throw OracleSizeError("modules_bruteforce: more than " + std::to_string(kModuleCap) + " vertices");
  auto adj = detail::adjacency_masks(g);
  const detail::Mask all = n == 0 ? 0 : (detail::Mask{1} << n) - 1;
  std::vector<VertexSet> out;
  for (detail::Mask m = 1; m < all; ++m)
    if (std::popcount(m) > 1 && detail::is_module(adj, all, m)) out.push_back(detail::to_set(m));
  return out;
}

struct MdtNode {
  enum class Kind { leaf, series, parallel, prime };
  Kind kind = Kind::leaf;
  Vertex vertex = kNoVertex;  // leaves only
  VertexSet span;
  std::vector<MdtNode> children;

  /// Edges on the longest path down to a leaf.
  Vertex depth() const {
    Vertex d = 0;
    for (const auto& c : children) d = std::max(d, c.depth() + 1);
    return d;
  }
};

inline const char* kind_name(MdtNode::Kind k) {
  switch (k) {
    case MdtNode::Kind::leaf: return "leaf";
    case MdtNode::Kind::series: return "series";
    case MdtNode::Kind::parallel: return "parallel";
    case MdtNode::Kind::prime: return "prime";
  }
  return "?";
}

namespace detail {

inline MdtNode build_mdt(const std::vector<Mask>& adj, Mask s) {
  MdtNode node;
  node.span = to_set(s);
  if (std::popcount(s) == 1) {
    node.vertex = std::countr_zero(s);
    return node;
  }
  std::vector<Mask> parts = pieces(adj, s, false);
  if (parts.size() > 1) {
    node.kind = MdtNode::Kind::parallel;
  } else if (parts = pieces(adj, s, true); parts.size() > 1) {
    node.kind = MdtNode::Kind::series;
  } else {
    // Maximal proper modules of a prime quotient partition s.
    node.kind = MdtNode::Kind::prime;
    std::vector<Mask> mods;
    for (Mask m = (s - 1) & s; m; m = (m - 1) & s)
      if (is_module(adj, s, m)) mods.push_back(m);
    parts.clear();
    for (Mask m : mods) {
      const bool maximal = std::none_of(mods.begin(), mods.end(), [&](Mask o) { return o != m && (o & m) == m; });
      if (maximal) parts.push_back(m);
    }
    std::sort(parts.begin(), parts.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  }
  for (Mask p : parts) node.children.push_back(build_mdt(adj, p));
  return node;
}

}  // namespace detail

/// Modular decomposition tree by recursive brute force.
inline MdtNode mdt(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > kModuleCap) throw OracleSizeError("mdt: more than " + std::to_string(kModuleCap) + " vertices");
  if (n == 0) return MdtNode{MdtNode::Kind::parallel, kNoVertex, {}, {}};
  return detail::build_mdt(detail::adjacency_masks(g), (detail::Mask{1} << n) - 1);
}

inline Vertex check_mdt_depth(const Graph& g) { return mdt(g).depth(); }

struct TwinPartition {
  std::vector<VertexSet> classes;       // closed-neighborhood classes, by smallest member
  std::vector<Edge> false_twin_pairs;   // u < v, equal open neighborhoods
  std::vector<Vertex> class_of;
};

inline TwinPartition true_twin_classes(const Graph& g) {
  const Vertex n = g.vertex_count();
  TwinPartition t;
  t.class_of.assign(static_cast<std::size_t>(n), kNoVertex);
  auto closed = [&](Vertex v) {
    std::vector<Vertex> s(g.sorted_neighbors(v).begin(), g.sorted_neighbors(v).end());
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
  };
  std::vector<std::vector<Vertex>> cl(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cl[v] = closed(v);
  for (Vertex v = 0; v < n; ++v) {
    if (t.class_of[v] != kNoVertex) continue;
    t.class_of[v] = static_cast<Vertex>(t.classes.size());
    t.classes.push_back({v});
    for (Vertex w = v + 1; w < n; ++w)
      if (t.class_of[w] == kNoVertex && cl[w] == cl[v]) {
        t.class_of[w] = t.class_of[v];
        t.classes.back().push_back(w);
      }
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && std::ranges::equal(g.sorted_neighbors(u), g.sorted_neighbors(v)))
        t.false_twin_pairs.emplace_back(u, v);
  return t;
}

/// All orderings avoiding the three Left-Right patterns, in lexicographic order.
inline std::vector<VertexOrder> enumerate_left_right_orderings(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > kEnumerationCap)
    throw OracleSizeError("enumerate_left_right_orderings: more than " + std::to_string(kEnumerationCap) + " vertices");
  std::vector<VertexOrder> out;
  std::vector<Vertex> prefix;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Left-Right: an edge ac forces ab and bc for every b in between.
  auto clean_with = [&](Vertex c) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!g.has_edge(prefix[i], c)) continue;
      for (std::size_t j = i + 1; j < prefix.size(); ++j)
        if (!g.has_edge(prefix[i], prefix[j]) || !g.has_edge(prefix[j], c)) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self) -> void {
    if (static_cast<Vertex>(prefix.size()) == n) {
      out.emplace_back(prefix);
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || !clean_with(c)) continue;
      used[c] = 1;
      prefix.push_back(c);
      self(self);
      prefix.pop_back();
      used[c] = 0;
    }
  };
  extend(extend);
  return out;
}

/// Two Left-Right orderings not related by reversal and true-twin permutation.
using OrderPair = std::pair<VertexOrder, VertexOrder>;

inline Check<OrderPair> check_uniqueness(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("check_uniqueness: graph must be connected");
  auto orders = enumerate_left_right_orderings(g);
  if (orders.size() < 2) return Check<OrderPair>::pass();
  const auto twins = true_twin_classes(g);
  auto collapse = [&](const VertexOrder& o) {
    std::vector<Vertex> s;
    for (Vertex v : o) s.push_back(twins.class_of[v]);
    return s;
  };
  const auto base = collapse(orders.front());
  auto base_rev = base;
  std::reverse(base_rev.begin(), base_rev.end());
  for (std::size_t i = 1; i < orders.size(); ++i) {
    auto s = collapse(orders[i]);
    if (s != base && s != base_rev) return Check<OrderPair>::fail({orders.front(), orders[i]});
  }
  return Check<OrderPair>::pass();
}

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// On a connected graph, a bisimplicial ordering avoids COCOMPARABILITY too.
inline PatternCheck check_bisimplicial_implies_cocomp(const Graph& g, const VertexOrder& order) {
  if (!is_connected(g)) throw PreconditionError("check_bisimplicial_implies_cocomp: graph must be connected");
  if (!is_bisimplicial(g, order)) throw PreconditionError("check_bisimplicial_implies_cocomp: order is not bisimplicial");
  return avoids(g, order, {patterns::cocomparability});
}

// ---------------------------------------------------------------------------
// Structural properties checked by the test suite.

/// On a connected C4-free graph every nontrivial module is a clique or has a
/// clique neighborhood. Returns the first offending module.
inline std::optional<VertexSet> hsu_counterexample(const Graph& g) {
  auto adj = detail::adjacency_masks(g);
  auto is_clique = [&](detail::Mask m) {
    for (detail::Mask r = m; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((adj[v] & m) != (m & ~(detail::Mask{1} << v))) return false;
    }
    return true;
  };
  for (const auto& mod : modules_bruteforce(g)) {
    detail::Mask m = 0, nb = 0;
    for (Vertex v : mod) m |= detail::Mask{1} << v;
    for (Vertex v : mod) nb |= adj[v];
    nb &= ~m;
    if (!is_clique(m) && !is_clique(nb)) return mod;
  }
  return std::nullopt;
}

/// Prime nodes with a prime proper descendant, as (ancestor, descendant) spans.
inline std::optional<std::pair<VertexSet, VertexSet>> nested_prime_nodes(const MdtNode& root) {
  std::optional<std::pair<VertexSet, VertexSet>> found;
  auto walk = [&](auto&& self, const MdtNode& node, const MdtNode* prime_above) -> void {
    if (found) return;
    const MdtNode* above = prime_above;
    if (node.kind == MdtNode::Kind::prime) {
      if (prime_above) {
        found = std::make_pair(prime_above->span, node.span);
        return;
      }
      above = &node;
    }
    for (const auto& c : node.children) self(self, c, above);
  };
  walk(walk, root, nullptr);
  return found;
}

/// L, R cliques of equal size with the edges between them nested (no two
/// independent cross edges).
inline bool is_balanced_cobipartite_chain(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n % 2 != 0 || n > 20) return false;
  auto adj = detail::adjacency_masks(g);
  const detail::Mask all = (detail::Mask{1} << n) - 1;
  auto clique = [&](detail::Mask m) {
    for (detail::Mask r = m; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((adj[v] & m) != (m & ~(detail::Mask{1} << v))) return false;
    }
    return true;
  };
  for (detail::Mask l = 0; l <= all; ++l) {
    if (std::popcount(l) != n / 2 || !(l & 1U)) continue;
    const detail::Mask r = all & ~l;
    if (!clique(l) || !clique(r)) continue;
    bool nested = true;
    for (detail::Mask x = l; x && nested; x &= x - 1)
      for (detail::Mask y = l; y && nested; y &= y - 1) {
        const detail::Mask a = adj[std::countr_zero(x)] & r, b = adj[std::countr_zero(y)] & r;
        nested = (a & b) == a || (a & b) == b;
      }
    if (nested) return true;
  }
  return false;
}

/// For a connected UIG without true twins: every nontrivial module whose
/// node is prime spans all but one universal vertex and induces a balanced
/// co-bipartite chain graph. Returns the offending module span.
inline std::optional<VertexSet> chain_lemma_counterexample(const Graph& g) {
  const MdtNode root = mdt(g);
  std::optional<VertexSet> bad;
  auto walk = [&](auto&& self, const MdtNode& node) -> void {
    if (bad) return;
    if (node.kind == MdtNode::Kind::prime && node.span.size() > 1 &&
        static_cast<Vertex>(node.span.size()) < g.vertex_count()) {
      const bool rest_is_universal =
          static_cast<Vertex>(node.span.size()) == g.vertex_count() - 1 && [&] {
            std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
            for (Vertex v : node.span) in[v] = 1;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
              if (!in[v]) return g.degree(v) == g.vertex_count() - 1;
            return false;
          }();
      if (!rest_is_universal || !is_balanced_cobipartite_chain(induced_subgraph(g, node.span).graph)) {
        bad = node.span;
        return;
      }
    }
    for (const auto& c : node.children) self(self, c);
  };
  walk(walk, root);
  return bad;
}

}  // namespace certrec

#endif  // CERTREC_STRUCTURE_HPP
