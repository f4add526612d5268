#ifndef CERTREC_SEARCH_HPP
#define CERTREC_SEARCH_HPP

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "certrec/check.hpp"
#include "certrec/graph.hpp"

namespace certrec {

enum class Strategy { bfs, dfs };
enum class Priority { none, min_degree, max_degree };

/// minBFS / maxBFS / minDFS / maxDFS, or a plain search by id with Priority::none.
struct SearchSpec {
  Strategy strategy = Strategy::bfs;
  Priority priority = Priority::none;
  std::optional<Vertex> start;
};

inline SearchSpec min_bfs(std::optional<Vertex> start = {}) { return {Strategy::bfs, Priority::min_degree, start}; }
inline SearchSpec max_bfs(std::optional<Vertex> start = {}) { return {Strategy::bfs, Priority::max_degree, start}; }
inline SearchSpec min_dfs(std::optional<Vertex> start = {}) { return {Strategy::dfs, Priority::min_degree, start}; }
inline SearchSpec max_dfs(std::optional<Vertex> start = {}) { return {Strategy::dfs, Priority::max_degree, start}; }

struct SearchTree {
  std::vector<Vertex> parent;  // kNoVertex for roots
  std::vector<Vertex> rank;    // 1-based visit index
  std::vector<Vertex> roots;   // component start vertices, in visit order

  Vertex size() const { return static_cast<Vertex>(parent.size()); }
  bool is_root(Vertex v) const { return parent[v] == kNoVertex; }

  /// Number of tree edges between v and its root.
  std::vector<Vertex> depths(const VertexOrder& order) const {
    std::vector<Vertex> d(parent.size(), 0);
    for (Vertex v : order)
      if (parent[v] != kNoVertex) d[v] = d[parent[v]] + 1;
    return d;
  }
};

struct SearchResult {
  VertexOrder order;
  SearchTree tree;
};

/// The vertex priority used by a search: degree order for min/max, ids otherwise.
inline VertexOrder priority_order(const Graph& g, Priority priority) {
  switch (priority) {
    case Priority::min_degree: return degree_sorted_vertices(g, DegreeDirection::increasing);
    case Priority::max_degree: return degree_sorted_vertices(g, DegreeDirection::decreasing);
    case Priority::none: break;
  }
  return VertexOrder::identity(g.vertex_count());
}

namespace detail {

// Traverses `g` whose adjacency lists are already in priority order. Whenever
// a component is exhausted, the next root is the first unvisited vertex of
// `roots`, then of `priority`.
inline SearchResult traverse(const Graph& g, Strategy strategy, const VertexOrder& priority,
                             std::span<const Vertex> roots) {
  const Vertex n = g.vertex_count();
  SearchTree tree;
  tree.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  tree.rank.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));

  auto discover = [&](Vertex v, Vertex parent) {
    tree.parent[v] = parent;
    seq.push_back(v);
    tree.rank[v] = static_cast<Vertex>(seq.size());
  };

  std::vector<std::pair<Vertex, std::size_t>> stack;  // DFS frames: vertex, next adjacency index
  std::size_t next_root = 0, next_priority = 0;
  auto pick_root = [&]() -> Vertex {
    while (next_root < roots.size()) {
      Vertex r = roots[next_root++];
      if (tree.rank[r] == 0) return r;
    }
    while (next_priority < static_cast<std::size_t>(n)) {
      Vertex r = priority[static_cast<Vertex>(next_priority++)];
      if (tree.rank[r] == 0) return r;
    }
    return kNoVertex;
  };

  for (Vertex root = pick_root(); root != kNoVertex; root = pick_root()) {
    tree.roots.push_back(root);
    discover(root, kNoVertex);
    if (strategy == Strategy::bfs) {
      // seq doubles as the queue: BFS visit order equals enqueue order.
      for (std::size_t head = seq.size() - 1; head < seq.size(); ++head) {
        Vertex u = seq[head];
        for (Vertex w : g.neighbors(u))
          if (tree.rank[w] == 0) discover(w, u);
      }
    } else {
      stack.emplace_back(root, 0);
      while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        auto nbrs = g.neighbors(u);
        while (idx < nbrs.size() && tree.rank[nbrs[idx]] != 0) ++idx;
        if (idx == nbrs.size()) {
          stack.pop_back();
          continue;
        }
        Vertex w = nbrs[idx++];
        discover(w, u);
        stack.emplace_back(w, 0);
      }
    }
  }
  return {VertexOrder(std::move(seq)), std::move(tree)};
}

}  // namespace detail

/// Degree-guided search: bucket-sort by degree once, resort adjacency lists to
/// that priority, then a plain queue BFS or stack DFS. Restarts at the first
/// unvisited vertex of the priority order. O(n + m).
inline SearchResult run_search(const Graph& g, const SearchSpec& spec, std::span<const Vertex> preferred_roots = {}) {
  if (spec.start && (*spec.start < 0 || *spec.start >= g.vertex_count()))
    throw std::invalid_argument("run_search: start vertex " + std::to_string(*spec.start) + " out of range");
  for (Vertex r : preferred_roots)
    if (r < 0 || r >= g.vertex_count()) throw std::invalid_argument("run_search: root out of range");
  const VertexOrder priority = priority_order(g, spec.priority);
  std::vector<Vertex> roots;
  if (spec.start) roots.push_back(*spec.start);
  roots.insert(roots.end(), preferred_roots.begin(), preferred_roots.end());
  if (spec.priority == Priority::none) return detail::traverse(g, spec.strategy, priority, roots);
  return detail::traverse(resort_adjacency(g, priority), spec.strategy, priority, roots);
}

/// A violating triple (a, b, c): a <σ b <σ c, ac ∈ E, ab ∉ E, without the
/// required witness d.
using Triple = std::array<Vertex, 3>;

/// Four-point condition for BFS / DFS orderings. Reports the violation that is
/// lexicographically first by the positions of (a, b, c). O(n^2 + m).
inline Check<Triple> check_four_point(const Graph& g, const VertexOrder& order, Strategy kind) {
  const Vertex n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("check_four_point: order size mismatch");
  // earliest[b]: smallest neighbor position of b; before[b]: largest neighbor position below pos(b).
  std::vector<Vertex> earliest(static_cast<std::size_t>(n), n), before(static_cast<std::size_t>(n), -1),
      latest(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex pv = order.position(v);
    for (Vertex w : g.sorted_neighbors(v)) {
      const Vertex pw = order.position(w);
      earliest[v] = std::min(earliest[v], pw);
      latest[v] = std::max(latest[v], pw);
      if (pw < pv) before[v] = std::max(before[v], pw);
    }
  }
  std::vector<Vertex> mark(static_cast<std::size_t>(n), -1);
  for (Vertex pa = 0; pa < n; ++pa) {
    const Vertex a = order[pa];
    if (latest[a] <= pa + 1) continue;  // needs a neighbor c beyond some b
    for (Vertex w : g.sorted_neighbors(a)) mark[w] = pa;
    for (Vertex pb = pa + 1; pb < latest[a]; ++pb) {
      const Vertex b = order[pb];
      if (mark[b] == pa) continue;
      const bool witnessed = kind == Strategy::bfs ? earliest[b] < pa : before[b] > pa;
      if (witnessed) continue;
      for (Vertex pc = pb + 1; pc < n; ++pc)
        if (mark[order[pc]] == pa) return Check<Triple>::fail({a, b, order[pc]});
    }
  }
  return Check<Triple>::pass();
}

}  // namespace certrec

#endif  // CERTREC_SEARCH_HPP
