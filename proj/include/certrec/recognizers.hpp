#ifndef CERTREC_RECOGNIZERS_HPP
#define CERTREC_RECOGNIZERS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "certrec/certificate.hpp"
#include "certrec/graph.hpp"
#include "certrec/minimize.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"
#include "certrec/search.hpp"

namespace certrec {

namespace detail {

inline Certificate ordering_certificate(VertexOrder order, std::initializer_list<TriplePattern> set) {
  Certificate c;
  c.kind = CertificateKind::ordering;
  c.order = std::move(order);
  for (const auto& p : set) c.patterns.emplace_back(p.name);
  return c;
}

// Minimal non-member inside g, named against the class's obstruction list.
inline Certificate minimal_obstruction(const Graph& g, GraphClass cls, const std::function<bool(const Graph&)>& member,
                                       std::vector<Vertex> start, std::optional<PatternViolation> violation = {}) {
  auto core = shrink_to_minimal(g, std::move(start), member);
  auto names = allowed_obstructions(cls);
  auto hit = classify_obstruction(g, core, names);
  if (!hit)
    throw std::logic_error("minimal non-" + std::string(class_name(cls)) + " subgraph on " +
                           std::to_string(core.size()) + " vertices matches no obstruction");
  return negative_certificate(*hit, std::move(violation));
}

inline bool star_member(const Graph& g) {
  auto tau = run_search(g, max_bfs()).order;
  return star_fast(g, tau.reversed());
}

inline bool split_member(const Graph& g) {
  auto tau = run_search(g, max_bfs()).order;
  return split_fast(g, tau.reversed());
}

// Bipartite with nested neighborhoods on one colour class.
inline bool chain_member(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> colour(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.sorted_neighbors(queue[h])) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[h]];
          queue.push_back(w);
        } else if (colour[w] == colour[queue[h]]) {
          return false;
        }
      }
  }
  VertexSet side;
  for (Vertex v = 0; v < n; ++v)
    if (colour[v] == 0) side.push_back(v);
  return check_nested(g, std::move(side)).passed();
}

}  // namespace detail

/// Star: every edge is covered by one vertex. Single maxBFS; the reversed
/// visit order must avoid STAR, i.e. every edge ends at the search root.
inline Verdict recognize_star(const Graph& g) {
  Verdict v;
  v.graph_class = GraphClass::star;
  auto tau = run_search(g, max_bfs()).order;
  auto rho = tau.reversed();
  auto check = avoids(g, rho, {patterns::star});
  v.member = check.passed();
  if (v.member) {
    v.certificate = detail::ordering_certificate(std::move(rho), {patterns::star});
    return v;
  }
  // The violating edge ab misses the root s. A neighbor x of s outside {a, b}
  // yields 4 vertices with two disjoint edges; otherwise s, a, b is a triangle.
  const auto& bad = check.witness();
  const Vertex s = tau[0], a = bad.a, b = bad.b;
  Vertex x = kNoVertex;
  for (Vertex w : g.sorted_neighbors(s))
    if (w != a && w != b) {
      x = w;
      break;
    }
  std::vector<Vertex> cand;
  if (x == kNoVertex) {
    cand = {s, a, b};
  } else {
    std::vector<Vertex> four{a, b, s, x};
    cand = four;
    // A triangle inside the four vertices is the smaller obstruction.
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<Vertex> three;
      for (int i = 0; i < 4; ++i)
        if (i != skip) three.push_back(four[i]);
      if (g.has_edge(three[0], three[1]) && g.has_edge(three[1], three[2]) && g.has_edge(three[0], three[2])) {
        cand = three;
        break;
      }
    }
  }
  auto names = allowed_obstructions(GraphClass::star);
  auto hit = classify_obstruction(g, cand, names);
  if (!hit) {
    v.certificate = detail::minimal_obstruction(g, GraphClass::star, detail::star_member, all_vertices(g), bad);
    return v;
  }
  v.certificate = negative_certificate(*hit, bad);
  return v;
}

/// Split: single maxBFS; the reversed order must avoid SPLIT. The ordering
/// then reads as an independent prefix followed by a clique suffix.
inline Verdict recognize_split(const Graph& g) {
  Verdict v;
  v.graph_class = GraphClass::split;
  auto rho = run_search(g, max_bfs()).order.reversed();
  auto check = avoids(g, rho, {patterns::split});
  v.member = check.passed();
  if (!v.member) {
    v.certificate =
        detail::minimal_obstruction(g, GraphClass::split, detail::split_member, all_vertices(g), check.witness());
    return v;
  }
  // First position holding a vertex with an earlier neighbor starts the clique.
  const Vertex n = g.vertex_count();
  Vertex q = n;
  for (Vertex p = 0; p < n && q == n; ++p)
    for (Vertex w : g.sorted_neighbors(rho[p]))
      if (rho.before(w, rho[p])) {
        q = p;
        break;
      }
  // The last independent vertex joins the clique when it sees all of it.
  if (q > 0 && q < n && g.degree(rho[q - 1]) >= n - q) {
    Vertex seen = 0;
    for (Vertex w : g.sorted_neighbors(rho[q - 1])) seen += rho.position(w) >= q;
    if (seen == n - q) --q;
  }
  Partition part;
  for (Vertex p = 0; p < n; ++p) (p < q ? part.first : part.second).push_back(rho[p]);
  std::sort(part.first.begin(), part.first.end());
  std::sort(part.second.begin(), part.second.end());
  v.certificate = detail::ordering_certificate(std::move(rho), {patterns::split});
  v.certificate.partition = std::move(part);
  return v;
}

/// Bipartite chain: minBFS on the complement gives τ, checked against the two
/// chain patterns on g itself.
inline Verdict recognize_bipartite_chain(const Graph& g) {
  Verdict v;
  v.graph_class = GraphClass::bipartite_chain;
  auto tau = run_search(complement(g), min_bfs()).order;
  auto check = avoids(g, tau, {patterns::chain1, patterns::chain2});
  v.member = check.passed();
  if (!v.member) {
    v.certificate = detail::minimal_obstruction(g, GraphClass::bipartite_chain, detail::chain_member,
                                                all_vertices(g), check.witness());
    return v;
  }
  // No vertex has neighbors on both sides of it, so "has an earlier
  // neighbor" splits the edges into A -> B.
  Partition part;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    bool earlier = false;
    for (Vertex w : g.sorted_neighbors(x)) earlier = earlier || tau.before(w, x);
    (earlier ? part.second : part.first).push_back(x);
  }
  v.certificate = detail::ordering_certificate(std::move(tau), {patterns::chain1, patterns::chain2});
  v.certificate.partition = std::move(part);
  return v;
}

}  // namespace certrec

#endif  // CERTREC_RECOGNIZERS_HPP
