#ifndef CERTREC_GRAPH_HPP
#define CERTREC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certrec/vertex_order.hpp"

namespace certrec {

using Edge = std::pair<Vertex, Vertex>;

/// Sorted sequence of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Two adjacency views are kept: the canonical one (neighbors by ascending id,
/// used for edge queries) and the traversal one returned by neighbors(), which
/// starts out canonical and is replaced by resort_adjacency().
class Graph {
 public:
  Graph() : offsets_(1, 0), sorted_(std::make_shared<const std::vector<Vertex>>()) {}

  Graph(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::size_t> deg(nn, 0);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.." +
                         std::to_string(n - 1));
      if (u == v) throw GraphError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      ++deg[u];
      ++deg[v];
    }
    offsets_.assign(nn + 1, 0);
    for (std::size_t v = 0; v < nn; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    std::vector<Vertex> adj(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      adj[cursor[u]++] = v;
      adj[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < nn; ++v) {
      auto first = adj.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      auto last = adj.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      std::sort(first, last);
      auto dup = std::adjacent_find(first, last);
      if (dup != last)
        throw GraphError("duplicate edge (" + std::to_string(std::min<Vertex>(static_cast<Vertex>(v), *dup)) + ", " +
                         std::to_string(std::max<Vertex>(static_cast<Vertex>(v), *dup)) + ")");
    }
    edge_count_ = edges.size();
    adj_ = adj;
    sorted_ = std::make_shared<const std::vector<Vertex>>(std::move(adj));
  }

  Vertex vertex_count() const { return static_cast<Vertex>(offsets_.size() - 1); }
  std::size_t edge_count() const { return edge_count_; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }

  /// Neighbors in traversal order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  /// Neighbors by ascending id.
  std::span<const Vertex> sorted_neighbors(Vertex v) const {
    return {sorted_->data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto s = sorted_neighbors(u);
    return std::binary_search(s.begin(), s.end(), v);
  }

  /// All edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : sorted_neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Same vertex count and edge set; traversal order is ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && *a.sorted_ == *b.sorted_;
  }

 private:
  friend Graph resort_adjacency(const Graph& g, const VertexOrder& order);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::shared_ptr<const std::vector<Vertex>> sorted_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(Vertex n, std::span<const Edge> edges) { return Graph(n, edges); }
inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges) {
  return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Each adjacency list re-enumerated in the sequence given by `order`.
/// Linear: every u, taken in order, is appended to the list of each neighbor.
inline Graph resort_adjacency(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw std::invalid_argument("resort_adjacency: order size mismatch");
  Graph r = g;
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (Vertex u : order)
    for (Vertex v : g.sorted_neighbors(u)) r.adj_[cursor[v]++] = u;
  return r;
}

inline Graph complement(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2 - g.edge_count());
  std::vector<char> adjacent(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.sorted_neighbors(u)) adjacent[v] = 1;
    for (Vertex v = u + 1; v < n; ++v)
      if (!adjacent[v]) edges.emplace_back(u, v);
    for (Vertex v : g.sorted_neighbors(u)) adjacent[v] = 0;
  }
  return Graph(n, edges);
}

/// A graph together with the original id of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// Vertices relabeled 0..|s|-1 in the order of `s`.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> local(static_cast<std::size_t>(n), kNoVertex);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw GraphError("induced_subgraph: vertex out of range");
    if (local[s[i]] != kNoVertex) throw GraphError("induced_subgraph: repeated vertex");
    local[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (Vertex w : g.sorted_neighbors(s[i]))
      if (local[w] != kNoVertex && local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
  return {Graph(static_cast<Vertex>(s.size()), edges), std::vector<Vertex>(s.begin(), s.end())};
}

/// Component label per vertex, labels numbered by smallest member.
inline std::vector<Vertex> component_labels(const Graph& g, Vertex* count = nullptr) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> label(static_cast<std::size_t>(n), kNoVertex);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNoVertex) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.sorted_neighbors(u))
        if (label[w] == kNoVertex) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

/// Parts ordered by smallest member, each part sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  Vertex count = 0;
  auto label = component_labels(g, &count);
  std::vector<VertexSet> parts(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.vertex_count(); ++v) parts[label[v]].push_back(v);
  return parts;
}

/// Component label of every vertex, its rank inside the component, and the
/// members of each component by ascending id.
struct ComponentIndex {
  std::vector<Vertex> label;
  std::vector<Vertex> local;
  std::vector<VertexSet> members;
};

inline ComponentIndex component_index(const Graph& g) {
  Vertex count = 0;
  ComponentIndex c;
  c.label = component_labels(g, &count);
  const Vertex n = g.vertex_count();
  c.members.resize(static_cast<std::size_t>(count));
  c.local.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    c.local[v] = static_cast<Vertex>(c.members[c.label[v]].size());
    c.members[c.label[v]].push_back(v);
  }
  return c;
}

/// The same index read off a spanning forest, given as parent pointers and
/// a visit order that lists every parent before its children. O(n).
inline ComponentIndex component_index(std::span<const Vertex> parent, std::span<const Vertex> visit) {
  const std::size_t n = parent.size();
  std::vector<Vertex> root(n), slot(n, kNoVertex);
  for (Vertex v : visit) root[v] = parent[v] == kNoVertex ? v : root[parent[v]];
  ComponentIndex c;
  c.label.resize(n);
  c.local.resize(n);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    Vertex& s = slot[root[v]];
    if (s == kNoVertex) {
      s = static_cast<Vertex>(c.members.size());
      c.members.emplace_back();
    }
    c.label[v] = s;
    c.local[v] = static_cast<Vertex>(c.members[s].size());
    c.members[s].push_back(v);
  }
  return c;
}

/// Induced subgraph of every component, in total time O(n + m).
inline std::vector<Subgraph> component_subgraphs(const Graph& g) {
  auto c = component_index(g);
  std::vector<std::vector<Edge>> edges(c.members.size());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : g.sorted_neighbors(u))
      if (u < w) edges[c.label[u]].emplace_back(c.local[u], c.local[w]);
  std::vector<Subgraph> out;
  out.reserve(c.members.size());
  for (std::size_t i = 0; i < c.members.size(); ++i)
    out.push_back({Graph(static_cast<Vertex>(c.members[i].size()), edges[i]), std::move(c.members[i])});
  return out;
}

inline bool is_connected(const Graph& g) {
  Vertex count = 0;
  component_labels(g, &count);
  return count <= 1;
}

enum class DegreeDirection { increasing, decreasing };

/// Bucket sort by degree; equal degrees keep ascending id.
inline VertexOrder degree_sorted_vertices(const Graph& g, DegreeDirection direction) {
  const Vertex n = g.vertex_count();
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++start[g.degree(v)];
  if (direction == DegreeDirection::increasing) {
    std::size_t acc = 0;
    for (auto& s : start) acc += std::exchange(s, acc);
  } else {
    std::size_t acc = 0;
    for (std::size_t d = start.size(); d-- > 0;) acc += std::exchange(start[d], acc);
  }
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) seq[start[g.degree(v)]++] = v;
  return VertexOrder(std::move(seq));
}

/// Vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

}  // namespace certrec

#endif  // CERTREC_GRAPH_HPP
