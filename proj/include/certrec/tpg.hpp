#ifndef CERTREC_TPG_HPP
#define CERTREC_TPG_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "certrec/certificate.hpp"
#include "certrec/graph.hpp"
#include "certrec/minimize.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"
#include "certrec/search.hpp"

namespace certrec {

/// Counters of the trivially perfect maxDFS. countin counts discoveries,
/// countout counts finished vertices; both start at 1.
struct TpgDfsState {
  long long countin = 1;
  long long countout = 1;
  std::vector<Vertex> ancestors;  // in-progress neighbors seen by DFS(u)
  std::vector<Vertex> rank;       // 0 = unvisited
  std::vector<Vertex> parent;
  std::vector<char> visited;      // finished
  std::vector<Vertex> sequence;   // discovery order
  std::vector<Vertex> stack;      // in-progress vertices, root first

  bool in_progress(Vertex v) const { return rank[v] != 0 && !visited[v]; }
};

struct TpgRun {
  TpgDfsState state;
  // First vertex whose test failed, with its tree parent.
  std::optional<std::pair<Vertex, Vertex>> failure;
  // countin - countout and Ancestors(u) at each DFS(u) termination, in order.
  std::vector<std::pair<long long, Vertex>> checks;
};

/// The maxDFS of the trivially perfect algorithm. Stops at the first vertex
/// that is not adjacent to all its ancestors. `record` keeps the per-vertex
/// counter readings for tests.
inline TpgRun run_tpg_dfs(const Graph& g, bool record = false) {
  const Vertex n = g.vertex_count();
  const VertexOrder tau = degree_sorted_vertices(g, DegreeDirection::decreasing);
  const Graph h = resort_adjacency(g, tau);
  TpgRun run;
  TpgDfsState& s = run.state;
  s.ancestors.assign(static_cast<std::size_t>(n), 0);
  s.rank.assign(static_cast<std::size_t>(n), 0);
  s.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  s.visited.assign(static_cast<std::size_t>(n), 0);
  s.sequence.reserve(static_cast<std::size_t>(n));

  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<char> status(static_cast<std::size_t>(n), 0);  // 0 new, 1 in progress, 2 finished
  auto discover = [&](Vertex v, Vertex from) {
    status[v] = 1;
    s.rank[v] = static_cast<Vertex>(s.countin++);
    s.parent[v] = from;
    s.sequence.push_back(v);
    s.stack.push_back(v);
  };

  for (Vertex root : tau) {
    if (status[root] != 0) continue;
    // The root is never finished inside a parent's loop; counting it out up
    // front keeps countin - countout equal to the number of proper ancestors.
    discover(root, kNoVertex);
    ++s.countout;
    while (!s.stack.empty()) {
      const Vertex u = s.stack.back();
      auto nbrs = h.neighbors(u);
      bool descended = false;
      while (next[u] < nbrs.size()) {
        const Vertex v = nbrs[next[u]++];
        if (status[v] == 1) {
          ++s.ancestors[u];
        } else if (status[v] == 0) {
          discover(v, u);
          descended = true;
          break;
        }
      }
      if (descended) continue;
      // DFS(u) terminates.
      const long long path = s.countin - s.countout;
      if (record) run.checks.emplace_back(path, s.ancestors[u]);
      if (path != s.ancestors[u]) {
        run.failure = std::make_pair(u, s.parent[u]);
        return run;
      }
      s.stack.pop_back();
      s.visited[u] = 1;
      status[u] = 2;
      if (s.parent[u] != kNoVertex) ++s.countout;
    }
  }
  return run;
}

namespace detail {

inline bool tpg_member(const Graph& g) { return !run_tpg_dfs(g).failure; }

// x, y adjacent; z adjacent to y but not x; t adjacent to z but not y.
inline std::optional<Classified> tpg_quad(const Graph& g, Vertex x, Vertex y, Vertex z, Vertex t) {
  if (t == kNoVertex || z == kNoVertex) return std::nullopt;
  std::vector<Vertex> s{x, y, z, t};
  static constexpr std::string_view names[] = {"P4", "C4"};
  return classify_obstruction(g, s, names);
}

}  // namespace detail

/// P4 / C4 through the failing vertex x and its parent y. First the two
/// marking sweeps: z is the first in-progress non-neighbor of x, t a neighbor
/// of z outside N[y]. If z happens not to see y, the shallowest stack vertex
/// that misses an earlier stack vertex gives a quadruple that always works.
inline Certificate neg_certificate_tpg(const Graph& g, const TpgDfsState& state, Vertex x, Vertex y) {
  const Vertex n = g.vertex_count();
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  auto pick_outside = [&](Vertex from, Vertex avoid) {
    std::fill(mark.begin(), mark.end(), 0);
    mark[avoid] = 1;
    for (Vertex w : g.sorted_neighbors(avoid)) mark[w] = 1;
    for (Vertex w : g.sorted_neighbors(from))
      if (!mark[w]) return w;
    return kNoVertex;
  };

  if (y != kNoVertex) {
    for (Vertex w : g.sorted_neighbors(x)) mark[w] = 1;
    Vertex z = kNoVertex;
    for (Vertex u = 0; u < n && z == kNoVertex; ++u)
      if (!mark[u] && u != x && state.in_progress(u)) z = u;
    if (z != kNoVertex)
      if (auto hit = detail::tpg_quad(g, x, y, z, pick_outside(z, y))) return negative_certificate(*hit);
  }

  const auto& path = state.stack;
  std::vector<Vertex> depth_of(static_cast<std::size_t>(n), kNoVertex);
  for (std::size_t i = 0; i < path.size(); ++i) depth_of[path[i]] = static_cast<Vertex>(i);
  for (std::size_t j = 1; j < path.size(); ++j) {
    Vertex seen = 0;
    for (Vertex w : g.sorted_neighbors(path[j]))
      if (depth_of[w] != kNoVertex && depth_of[w] < static_cast<Vertex>(j)) ++seen;
    if (seen == static_cast<Vertex>(j)) continue;
    // path[j] misses some earlier stack vertex; path[j-1] sees all of them.
    std::fill(mark.begin(), mark.end(), 0);
    for (Vertex w : g.sorted_neighbors(path[j])) mark[w] = 1;
    Vertex z = kNoVertex;
    for (std::size_t i = 0; i + 1 < j && z == kNoVertex; ++i)
      if (!mark[path[i]]) z = path[i];
    if (auto hit = detail::tpg_quad(g, path[j], path[j - 1], z, pick_outside(z, path[j - 1])))
      return negative_certificate(*hit);
    break;
  }
  auto core = shrink_to_minimal(g, all_vertices(g), detail::tpg_member);
  auto names = allowed_obstructions(GraphClass::trivially_perfect);
  auto hit = classify_obstruction(g, core, names);
  if (!hit) throw std::logic_error("trivially perfect rejection without a P4 or C4");
  return negative_certificate(*hit);
}

namespace detail {

inline Verdict tpg_verdict(const Graph& g) {
  Verdict v;
  v.graph_class = GraphClass::trivially_perfect;
  TpgRun run = run_tpg_dfs(g);
  v.member = !run.failure;
  if (!v.member) {
    v.certificate = neg_certificate_tpg(g, run.state, run.failure->first, run.failure->second);
    return v;
  }
  v.certificate.kind = CertificateKind::tree;
  v.certificate.parent = std::move(run.state.parent);
  v.certificate.order = VertexOrder(std::move(run.state.sequence));
  v.certificate.patterns = {std::string(patterns::tpg1.name), std::string(patterns::tpg2.name)};
  return v;
}

}  // namespace detail

/// Trivially perfect: one maxDFS with the countin / countout / Ancestors test.
/// Members get the DFS forest (its closure is g) and the visit order.
inline Verdict recognize_trivially_perfect(const Graph& g) {
  Verdict v = detail::tpg_verdict(g);
  if (!v.member) {
    if (is_connected(g)) return v;
    for (auto& part : component_subgraphs(g)) {
      Verdict sub = detail::tpg_verdict(part.graph);
      sub.component_vertices = std::move(part.original);
      v.components.push_back(std::move(sub));
    }
    return v;
  }
  // Each DFS tree spans one component; restrict the forest and the order.
  auto index = component_index(v.certificate.parent, v.certificate.order->sequence());
  if (index.members.size() <= 1) return v;
  v.components.resize(index.members.size());
  for (std::size_t c = 0; c < index.members.size(); ++c) {
    Verdict& sub = v.components[c];
    sub.graph_class = GraphClass::trivially_perfect;
    sub.member = true;
    sub.certificate.kind = CertificateKind::tree;
    sub.certificate.patterns = v.certificate.patterns;
    sub.certificate.parent.resize(index.members[c].size());
    sub.component_vertices = std::move(index.members[c]);
  }
  std::vector<std::vector<Vertex>> seqs(v.components.size());
  for (Vertex x : *v.certificate.order) {
    const Vertex p = v.certificate.parent[x];
    v.components[index.label[x]].certificate.parent[index.local[x]] = p == kNoVertex ? kNoVertex : index.local[p];
    seqs[index.label[x]].push_back(index.local[x]);
  }
  for (std::size_t c = 0; c < seqs.size(); ++c) v.components[c].certificate.order = VertexOrder(std::move(seqs[c]));
  return v;
}

}  // namespace certrec

#endif  // CERTREC_TPG_HPP
