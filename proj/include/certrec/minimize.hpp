#ifndef CERTREC_MINIMIZE_HPP
#define CERTREC_MINIMIZE_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "certrec/graph.hpp"

namespace certrec {

/// Shrinks `start` to a vertex set whose induced subgraph still fails
/// `member` but every single-vertex deletion passes it. For a hereditary
/// class this is a minimal forbidden induced subgraph.
///
/// Deletes chunks of halving size first, then single vertices.
inline std::vector<Vertex> shrink_to_minimal(const Graph& g, std::vector<Vertex> start,
                                             const std::function<bool(const Graph&)>& member) {
  auto fails_without = [&](const std::vector<Vertex>& keep) { return !member(induced_subgraph(g, keep).graph); };
  std::size_t chunk = std::max<std::size_t>(start.size() / 2, 1);
  while (true) {
    bool removed = false;
    for (std::size_t at = 0; at < start.size();) {
      const std::size_t len = std::min(chunk, start.size() - at);
      std::vector<Vertex> keep;
      keep.reserve(start.size() - len);
      keep.insert(keep.end(), start.begin(), start.begin() + static_cast<std::ptrdiff_t>(at));
      keep.insert(keep.end(), start.begin() + static_cast<std::ptrdiff_t>(at + len), start.end());
      if (fails_without(keep)) {
        start = std::move(keep);
        removed = true;
      } else {
        at += len;
      }
    }
    if (chunk == 1 && !removed) break;
    if (chunk > 1) chunk = std::max<std::size_t>(chunk / 2, 1);
  }
  std::sort(start.begin(), start.end());
  return start;
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex i = 0; i < g.vertex_count(); ++i) v[i] = i;
  return v;
}

}  // namespace certrec

#endif  // CERTREC_MINIMIZE_HPP
