#ifndef CERTREC_CERTIFICATE_HPP
#define CERTREC_CERTIFICATE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certrec/check.hpp"
#include "certrec/graph.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"

namespace certrec {

enum class GraphClass { star, split, bipartite_chain, trivially_perfect, unit_interval };

inline constexpr GraphClass kAllClasses[] = {GraphClass::star, GraphClass::split, GraphClass::bipartite_chain,
                                             GraphClass::trivially_perfect, GraphClass::unit_interval};

inline std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::star: return "star";
    case GraphClass::split: return "split";
    case GraphClass::bipartite_chain: return "bipartite-chain";
    case GraphClass::trivially_perfect: return "trivially-perfect";
    case GraphClass::unit_interval: return "unit-interval";
  }
  return "?";
}

inline std::optional<GraphClass> class_by_name(std::string_view name) {
  for (auto c : kAllClasses)
    if (class_name(c) == name) return c;
  return std::nullopt;
}

/// Obstructions a negative certificate of the class may name.
inline std::vector<std::string_view> allowed_obstructions(GraphClass c) {
  switch (c) {
    case GraphClass::star: return {"triangle", "2K2", "P4", "C4"};
    case GraphClass::split: return {"2K2", "C4", "hole"};
    case GraphClass::bipartite_chain: return {"2K2", "triangle", "hole"};
    case GraphClass::trivially_perfect: return {"P4", "C4"};
    case GraphClass::unit_interval: return {"claw", "net", "3-sun", "C4", "hole"};
  }
  return {};
}

enum class CertificateKind { ordering, tree, forbidden_subgraph };

inline std::string_view kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::ordering: return "ordering";
    case CertificateKind::tree: return "tree";
    case CertificateKind::forbidden_subgraph: return "forbidden_subgraph";
  }
  return "?";
}

/// Two-sided vertex partition. Split: (independent, clique). Chain: (A, B).
struct Partition {
  VertexSet first;
  VertexSet second;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::ordering;
  // ordering, and the visit order alongside a tree
  std::optional<VertexOrder> order;
  std::vector<std::string> patterns;
  // tree: kNoVertex marks roots
  std::vector<Vertex> parent;
  std::optional<Partition> partition;
  // forbidden_subgraph
  std::string obstruction;
  std::vector<Vertex> vertices;
  std::vector<std::string> roles;
  std::optional<PatternViolation> violation;

  bool positive() const { return kind != CertificateKind::forbidden_subgraph; }
};

struct Verdict {
  GraphClass graph_class = GraphClass::star;
  bool member = false;
  Certificate certificate;
  // Set on sub-verdicts: global ids of the component, in local-id order.
  std::vector<Vertex> component_vertices;
  std::vector<Verdict> components;
};

inline Certificate negative_certificate(const Classified& c, std::optional<PatternViolation> violation = {}) {
  Certificate cert;
  cert.kind = CertificateKind::forbidden_subgraph;
  cert.obstruction = c.tmpl.name;
  cert.vertices = c.vertices;
  cert.roles = c.tmpl.roles;
  cert.violation = std::move(violation);
  return cert;
}

namespace detail {

using Explain = Check<std::string>;

inline Explain fail(std::string why) { return Explain::fail(std::move(why)); }

inline bool covers(const std::vector<TriplePattern>& named, std::initializer_list<TriplePattern> required) {
  return std::all_of(required.begin(), required.end(), [&](const TriplePattern& r) {
    return std::any_of(named.begin(), named.end(), [&](const TriplePattern& p) { return p.same_shape(r); });
  });
}

inline Explain check_partition_cover(const Graph& g, const Partition& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto* side : {&p.first, &p.second})
    for (Vertex v : *side) {
      if (v < 0 || v >= g.vertex_count()) return fail("partition vertex " + std::to_string(v) + " out of range");
      if (seen[v]++) return fail("vertex " + std::to_string(v) + " appears twice in the partition");
    }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) return fail("vertex " + std::to_string(v) + " missing from the partition");
  return Explain::pass();
}

inline Explain check_independent(const Graph& g, const VertexSet& s, std::string_view what) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v : s)
    for (Vertex w : g.sorted_neighbors(v))
      if (in[w]) return fail(std::string(what) + " contains edge (" + std::to_string(v) + ", " + std::to_string(w) + ")");
  return Explain::pass();
}

inline Explain check_clique(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v : s) {
    Vertex inside = 0;
    for (Vertex w : g.sorted_neighbors(v)) inside += in[w];
    if (inside != static_cast<Vertex>(s.size()) - 1)
      return fail("clique side: vertex " + std::to_string(v) + " misses a clique vertex");
  }
  return Explain::pass();
}

// Neighborhoods of the side, sorted by degree, form an inclusion chain.
inline Explain check_nested(const Graph& g, VertexSet side) {
  std::sort(side.begin(), side.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> mark(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
  for (std::size_t i = 1; i < side.size(); ++i) {
    for (Vertex w : g.sorted_neighbors(side[i - 1])) mark[w] = side[i - 1];
    for (Vertex w : g.sorted_neighbors(side[i]))
      if (mark[w] != side[i - 1])
        return fail("neighborhoods of " + std::to_string(side[i - 1]) + " and " + std::to_string(side[i]) +
                    " are not nested");
  }
  return Explain::pass();
}

inline Explain check_forest(const Graph& g, const std::vector<Vertex>& parent) {
  const Vertex n = g.vertex_count();
  if (static_cast<Vertex>(parent.size()) != n) return fail("parent array has the wrong length");
  for (Vertex v = 0; v < n; ++v)
    if (parent[v] != kNoVertex && (parent[v] < 0 || parent[v] >= n || parent[v] == v))
      return fail("invalid parent for vertex " + std::to_string(v));
  // Depths by memoised walks; a revisit while walking means a cycle.
  std::vector<long long> depth(static_cast<std::size_t>(n), -1);
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < n; ++s) {
    Vertex v = s;
    while (v != kNoVertex && depth[v] < 0) {
      if (on_path[v]) return fail("parent pointers contain a cycle through " + std::to_string(v));
      on_path[v] = 1;
      path.push_back(v);
      v = parent[v];
    }
    long long d = v == kNoVertex ? -1 : depth[v];
    while (!path.empty()) {
      depth[path.back()] = ++d;
      on_path[path.back()] = 0;
      path.pop_back();
    }
  }
  long long closure = 0;
  for (auto d : depth) closure += d;
  if (closure != static_cast<long long>(g.edge_count()))
    return fail("closure has " + std::to_string(closure) + " edges, graph has " + std::to_string(g.edge_count()));
  // Closure size equals m, so walking every ancestor chain is O(m).
  for (Vertex v = 0; v < n; ++v)
    for (Vertex a = parent[v]; a != kNoVertex; a = parent[a])
      if (!g.has_edge(v, a))
        return fail("ancestor pair (" + std::to_string(a) + ", " + std::to_string(v) + ") is not an edge");
  return Explain::pass();
}

inline Explain check_positive(const Graph& g, GraphClass cls, const Certificate& c) {
  using namespace patterns;
  if (c.kind == CertificateKind::tree) {
    if (cls != GraphClass::trivially_perfect) return fail("tree certificates only certify trivially perfect graphs");
    if (auto r = check_forest(g, c.parent); !r) return r;
    if (!c.order) return Explain::pass();
  }
  if (!c.order) return fail("ordering certificate without an order");
  if (c.order->size() != g.vertex_count()) return fail("order length differs from the vertex count");
  std::vector<TriplePattern> named;
  try {
    named = patterns_by_name(c.patterns);
  } catch (const UnknownPattern& e) {
    return fail(e.what());
  }
  bool enough = false;
  switch (cls) {
    case GraphClass::star: enough = covers(named, {star}); break;
    case GraphClass::split: enough = covers(named, {split}); break;
    case GraphClass::bipartite_chain: enough = covers(named, {chain1, chain2}); break;
    case GraphClass::trivially_perfect: enough = covers(named, {tpg1, tpg2}); break;
    case GraphClass::unit_interval: enough = covers(named, {chordal, cochordal}); break;
  }
  if (!enough) return fail("the named patterns do not characterize " + std::string(class_name(cls)));
  if (auto r = avoids(g, *c.order, named); !r) {
    const auto& v = r.witness();
    return fail("order contains pattern " + v.pattern + " at (" + std::to_string(v.a) + ", " + std::to_string(v.b) +
                ", " + std::to_string(v.c) + ")");
  }
  if (cls == GraphClass::split || cls == GraphClass::bipartite_chain) {
    if (!c.partition) return fail("missing partition");
    if (auto r = check_partition_cover(g, *c.partition); !r) return r;
    if (cls == GraphClass::split) {
      if (auto r = check_independent(g, c.partition->first, "independent side"); !r) return r;
      return check_clique(g, c.partition->second);
    }
    if (auto r = check_independent(g, c.partition->first, "side A"); !r) return r;
    if (auto r = check_independent(g, c.partition->second, "side B"); !r) return r;
    return check_nested(g, c.partition->first);
  }
  return Explain::pass();
}

inline Explain check_negative(const Graph& g, GraphClass cls, const Certificate& c) {
  auto allowed = allowed_obstructions(cls);
  if (std::find(allowed.begin(), allowed.end(), c.obstruction) == allowed.end())
    return fail("obstruction '" + c.obstruction + "' does not refute " + std::string(class_name(cls)));
  const auto size = static_cast<Vertex>(c.vertices.size());
  auto t = template_by_name(c.obstruction, size);
  if (!t) return fail("unknown obstruction '" + c.obstruction + "' on " + std::to_string(size) + " vertices");
  if (c.obstruction == "hole") {
    if (size < 5) return fail("a hole needs at least 5 vertices");
    if (cls == GraphClass::bipartite_chain && size % 2 == 0) return fail("an even hole is bipartite");
  }
  if (!induces_exactly(g, c.vertices, *t))
    return fail("vertices do not induce " + c.obstruction + " in the listed arrangement");
  if (c.violation) {
    const auto& v = *c.violation;
    const Vertex n = g.vertex_count();
    if (v.a < 0 || v.b < 0 || v.c < 0 || v.a >= n || v.b >= n || v.c >= n) return fail("violation vertex out of range");
    TriplePattern p;
    try {
      p = pattern_by_name(v.pattern);
    } catch (const UnknownPattern& e) {
      return fail(e.what());
    }
    if (!p.matches(g.has_edge(v.a, v.b), g.has_edge(v.b, v.c), g.has_edge(v.a, v.c)))
      return fail("reported triple does not match pattern " + v.pattern);
  }
  return Explain::pass();
}

}  // namespace detail

/// Re-checks a verdict against the graph alone.
inline Check<std::string> verify_certificate(const Graph& g, const Verdict& v) {
  const Certificate& c = v.certificate;
  if (v.member != c.positive())
    return detail::fail(v.member ? "member verdict carries a negative certificate"
                                 : "non-member verdict carries a positive certificate");
  auto top = c.positive() ? detail::check_positive(g, v.graph_class, c) : detail::check_negative(g, v.graph_class, c);
  if (!top) return top;
  if (v.components.empty()) return top;
  std::vector<Vertex> owner(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
  bool all = true;
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const Verdict& sub = v.components[i];
    if (sub.graph_class != v.graph_class) return detail::fail("component verdict names another class");
    for (Vertex x : sub.component_vertices) {
      if (x < 0 || x >= g.vertex_count() || owner[x] != kNoVertex)
        return detail::fail("component " + std::to_string(i) + " lists an invalid or repeated vertex");
      owner[x] = static_cast<Vertex>(i);
    }
    auto part = induced_subgraph(g, sub.component_vertices);
    if (!is_connected(part.graph)) return detail::fail("component " + std::to_string(i) + " is not connected");
    if (auto r = verify_certificate(part.graph, sub); !r)
      return detail::fail("component " + std::to_string(i) + ": " + r.witness());
    all = all && sub.member;
  }
  if (std::find(owner.begin(), owner.end(), kNoVertex) != owner.end())
    return detail::fail("components do not cover every vertex");
  for (auto [a, b] : g.edges())
    if (owner[a] != owner[b]) return detail::fail("an edge joins two listed components");
  if (all != v.member) return detail::fail("component verdicts disagree with the overall verdict");
  return top;
}

}  // namespace certrec

#endif  // CERTREC_CERTIFICATE_HPP
