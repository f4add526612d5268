#ifndef CERTREC_UIG_HPP
#define CERTREC_UIG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "certrec/certificate.hpp"
#include "certrec/graph.hpp"
#include "certrec/minimize.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"
#include "certrec/search.hpp"

namespace certrec {

/// Both passes of the unit interval recognizer on a connected graph.
struct UigTrace {
  SearchResult pass1;  // maxBFS
  Vertex anchor = kNoVertex;
  SearchResult pass2;  // minBFS from the anchor
};

/// Per component of a BFS forest, the minimum-degree vertex of its deepest
/// layer, ties by id. Listed in the order the components were searched.
inline std::vector<Vertex> layer_anchors(const Graph& g, const SearchResult& bfs) {
  const Vertex n = g.vertex_count();
  const auto depth = bfs.tree.depths(bfs.order);
  std::vector<Vertex> root(static_cast<std::size_t>(n), kNoVertex), slot(static_cast<std::size_t>(n), kNoVertex);
  for (std::size_t i = 0; i < bfs.tree.roots.size(); ++i) slot[bfs.tree.roots[i]] = static_cast<Vertex>(i);
  for (Vertex v : bfs.order) root[v] = bfs.tree.is_root(v) ? v : root[bfs.tree.parent[v]];
  std::vector<Vertex> best(bfs.tree.roots.size(), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    Vertex& b = best[slot[root[v]]];
    if (b == kNoVertex || depth[v] > depth[b] || (depth[v] == depth[b] && g.degree(v) < g.degree(b))) b = v;
  }
  return best;
}

inline Vertex last_layer_anchor(const Graph& g, const SearchResult& bfs) {
  auto anchors = layer_anchors(g, bfs);
  return anchors.empty() ? kNoVertex : anchors.front();
}

inline UigTrace trace_unit_interval(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("trace_unit_interval: graph must be connected");
  UigTrace t;
  if (g.vertex_count() == 0) return t;
  t.pass1 = run_search(g, max_bfs());
  t.anchor = last_layer_anchor(g, t.pass1);
  t.pass2 = run_search(g, min_bfs(t.anchor));
  return t;
}

/// Replay of a traversal order checking that the eligible set plus the
/// current vertex is a clique after every step. O(n + m).
struct InvariantReplay {
  bool holds = true;
  Vertex step = kNoVertex;  // 0-based position of the vertex whose visit broke it
  Vertex u = kNoVertex, v = kNoVertex;  // non-adjacent pair in the set
  std::vector<Vertex> eligible_at;      // position of the first visited neighbor, or kNoVertex
};

inline InvariantReplay replay_invariant(const Graph& g, const VertexOrder& sigma) {
  const Vertex n = g.vertex_count();
  InvariantReplay r;
  r.eligible_at.assign(static_cast<std::size_t>(n), kNoVertex);
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> members;  // lazily pruned list of in_set vertices
  Vertex size = 0;
  std::vector<Vertex> fresh;
  auto count_inside = [&](Vertex x) {
    Vertex c = 0;
    for (Vertex w : g.sorted_neighbors(x)) c += in_set[w];
    return c;
  };
  auto missing_partner = [&](Vertex x) {
    std::vector<char> adj(static_cast<std::size_t>(n), 0);
    for (Vertex w : g.sorted_neighbors(x)) adj[w] = 1;
    for (Vertex y : members)
      if (in_set[y] && y != x && !adj[y]) return y;
    return kNoVertex;
  };
  for (Vertex p = 0; p < n; ++p) {
    const Vertex b = sigma[p];
    if (p > 0 && in_set[sigma[p - 1]]) {
      in_set[sigma[p - 1]] = 0;
      --size;
    }
    const bool was_eligible = in_set[b];
    if (!was_eligible) {
      in_set[b] = 1;
      ++size;
      members.push_back(b);
    }
    fresh.clear();
    for (Vertex w : g.sorted_neighbors(b))
      if (sigma.position(w) > p && r.eligible_at[w] == kNoVertex) {
        r.eligible_at[w] = p;
        fresh.push_back(w);
        in_set[w] = 1;
        ++size;
        members.push_back(w);
      }
    std::vector<Vertex> to_check = fresh;
    if (!was_eligible) to_check.push_back(b);
    for (Vertex x : to_check)
      if (count_inside(x) != size - 1) {
        r.holds = false;
        r.step = p;
        r.u = x;
        r.v = missing_partner(x);
        return r;
      }
    if (members.size() > 4 * static_cast<std::size_t>(size) + 16)
      std::erase_if(members, [&](Vertex y) { return !in_set[y]; });
  }
  return r;
}

namespace detail {

// Both passes on the whole graph. Every restart picks the vertex that a
// search of that component alone would start from, so pass 2 lists each
// component as one block in its own pass-2 order.
struct UigRun {
  SearchResult pass1;
  std::vector<Vertex> anchors;
  SearchResult pass2;
  bool member = false;
};

inline UigRun uig_run(const Graph& g) {
  UigRun r;
  r.pass1 = run_search(g, max_bfs());
  r.anchors = layer_anchors(g, r.pass1);
  r.pass2 = run_search(g, min_bfs(), r.anchors);
  r.member = has_consecutive_neighborhoods(g, r.pass2.order);
  return r;
}

inline bool uig_member(const Graph& g) { return uig_run(g).member; }

inline constexpr std::string_view kUigNames[] = {"claw", "C4", "net", "3-sun", "hole"};

inline std::optional<Classified> uig_try(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
  return classify_obstruction(g, s, kUigNames);
}

// Case analysis at the first step where the invariant breaks.
inline std::optional<Classified> uig_case_analysis(const Graph& g, const VertexOrder& sigma, const InvariantReplay& r) {
  if (r.holds || r.step < 1 || r.v == kNoVertex) return std::nullopt;
  const Vertex k = r.step - 1;
  const Vertex a = sigma[k], b = sigma[r.step];
  // r.u became eligible at this step (or is b itself).
  Vertex u = r.u, v = r.v;
  if (u == b) return std::nullopt;
  const bool v_new = r.eligible_at[v] == r.step;
  if (v_new) return uig_try(g, {b, a, u, v});
  const Vertex jb = r.eligible_at[b], jv = r.eligible_at[v];
  if (jb == kNoVertex || jv == kNoVertex) return std::nullopt;
  if (jb < jv) return uig_try(g, {b, sigma[jb], u, v});
  std::vector<char> nb(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex x : g.sorted_neighbors(b)) nb[x] = 1;
  // Earliest common visited neighbor of b and v.
  Vertex p = kNoVertex;
  for (Vertex x : g.sorted_neighbors(v))
    if (nb[x] && sigma.position(x) <= k && (p == kNoVertex || sigma.before(x, p))) p = x;
  std::size_t tries = 0;
  for (Vertex w : g.sorted_neighbors(v)) {
    if (nb[w] || w == b || sigma.position(w) <= r.step) continue;
    if (++tries > 64) break;
    if (g.has_edge(u, w)) {
      if (auto hit = uig_try(g, {b, u, w, v})) return hit;
      continue;
    }
    if (p == kNoVertex) continue;
    for (Vertex q : g.sorted_neighbors(p))
      if (auto hit = uig_try(g, {p, q, b, u, w, v})) return hit;
    for (Vertex z : g.sorted_neighbors(b))
      if (auto hit = uig_try(g, {p, z, b, u, w, v})) return hit;
  }
  return std::nullopt;
}

}  // namespace detail

/// Obstruction for a connected non-member whose pass-2 order is sigma. The
/// replay case analysis is tried first; every candidate is checked, and a
/// deletion-minimal subgraph is the fallback.
inline Certificate neg_certificate_uig(const Graph& g, const VertexOrder& sigma) {
  auto replay = replay_invariant(g, sigma);
  if (auto hit = detail::uig_case_analysis(g, sigma, replay)) return negative_certificate(*hit);
  auto core = shrink_to_minimal(g, all_vertices(g), detail::uig_member);
  auto hit = classify_obstruction(g, core, detail::kUigNames);
  if (!hit) throw std::logic_error("unit interval rejection without a claw, net, 3-sun or hole");
  return negative_certificate(*hit);
}

namespace detail {

inline std::optional<PatternViolation> lr_violation(const Graph& g, const VertexOrder& sigma) {
  using namespace patterns;
  auto r = avoids(g, sigma, {chordal, cochordal, cocomparability});
  if (r) return std::nullopt;
  return r.witness();
}

inline Certificate lr_certificate(VertexOrder sigma) {
  Certificate c;
  c.order = std::move(sigma);
  c.patterns = {std::string(patterns::chordal.name), std::string(patterns::cochordal.name),
                std::string(patterns::cocomparability.name)};
  return c;
}

inline Verdict component_uig_verdict(const Graph& part) {
  const UigTrace trace = trace_unit_interval(part);
  Verdict v;
  v.graph_class = GraphClass::unit_interval;
  v.member = has_consecutive_neighborhoods(part, trace.pass2.order);
  if (v.member) {
    v.certificate = lr_certificate(trace.pass2.order);
  } else {
    v.certificate = neg_certificate_uig(part, trace.pass2.order);
    v.certificate.violation = lr_violation(part, trace.pass2.order);
  }
  return v;
}

}  // namespace detail

/// Unit interval: a maxBFS, then a minBFS from the anchor of each
/// component's last layer. Member iff that order is Left-Right.
inline Verdict recognize_unit_interval(const Graph& g) {
  auto run = detail::uig_run(g);
  Verdict v;
  v.graph_class = GraphClass::unit_interval;
  v.member = run.member;
  if (v.member) {
    auto index = component_index(run.pass2.tree.parent, run.pass2.order.sequence());
    if (index.members.size() > 1) {
      std::vector<std::vector<Vertex>> seqs(index.members.size());
      for (Vertex x : run.pass2.order) seqs[index.label[x]].push_back(index.local[x]);
      for (std::size_t c = 0; c < seqs.size(); ++c) {
        Verdict sub;
        sub.graph_class = GraphClass::unit_interval;
        sub.member = true;
        sub.certificate = detail::lr_certificate(VertexOrder(std::move(seqs[c])));
        sub.component_vertices = std::move(index.members[c]);
        v.components.push_back(std::move(sub));
      }
    }
    v.certificate = detail::lr_certificate(std::move(run.pass2.order));
    return v;
  }
  std::vector<Verdict> subs;
  for (auto& part : component_subgraphs(g)) {
    Verdict sub = detail::component_uig_verdict(part.graph);
    sub.component_vertices = std::move(part.original);
    subs.push_back(std::move(sub));
  }
  auto bad = std::find_if(subs.begin(), subs.end(), [](const Verdict& s) { return !s.member; });
  const auto& map = bad->component_vertices;
  v.certificate = bad->certificate;
  for (auto& x : v.certificate.vertices) x = map[x];
  if (auto& vi = v.certificate.violation) vi->a = map[vi->a], vi->b = map[vi->b], vi->c = map[vi->c];
  if (subs.size() > 1) v.components = std::move(subs);
  return v;
}

}  // namespace certrec

#endif  // CERTREC_UIG_HPP
