#ifndef CERTREC_OBSTRUCTIONS_HPP
#define CERTREC_OBSTRUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "certrec/graph.hpp"

namespace certrec {

/// A small forbidden induced subgraph. Template vertex i plays roles[i].
struct ObstructionTemplate {
  std::string name;
  Vertex size = 0;
  std::vector<Edge> edges;
  std::vector<std::string> roles;

  bool adjacent(Vertex i, Vertex j) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return (e.first == i && e.second == j) || (e.first == j && e.second == i); });
  }
};

namespace obstruction {

inline ObstructionTemplate p4() { return {"P4", 4, {{0, 1}, {1, 2}, {2, 3}}, {"end", "inner", "inner", "end"}}; }
inline ObstructionTemplate c4() { return {"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {"cycle", "cycle", "cycle", "cycle"}}; }
inline ObstructionTemplate claw() { return {"claw", 4, {{0, 1}, {0, 2}, {0, 3}}, {"center", "leaf", "leaf", "leaf"}}; }
inline ObstructionTemplate two_k2() { return {"2K2", 4, {{0, 1}, {2, 3}}, {"edge1", "edge1", "edge2", "edge2"}}; }
inline ObstructionTemplate triangle() { return {"triangle", 3, {{0, 1}, {1, 2}, {0, 2}}, {"corner", "corner", "corner"}}; }
inline ObstructionTemplate net() {
  return {"net",
          6,
          {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}},
          {"corner", "corner", "corner", "pendant", "pendant", "pendant"}};
}
// Inner triangle 0,1,2; outer vertex 3 sees 0,1; 4 sees 1,2; 5 sees 0,2.
inline ObstructionTemplate sun3() {
  return {"3-sun",
          6,
          {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}},
          {"inner", "inner", "inner", "outer", "outer", "outer"}};
}
/// Chordless cycle on k vertices, k >= 4.
inline ObstructionTemplate hole(Vertex k) {
  ObstructionTemplate t{"hole", k, {}, std::vector<std::string>(static_cast<std::size_t>(k), "cycle")};
  for (Vertex i = 0; i < k; ++i) t.edges.emplace_back(i, (i + 1) % k);
  return t;
}

}  // namespace obstruction

/// Names of every template a certificate may carry.
inline constexpr std::string_view kObstructionNames[] = {"P4", "C4", "claw", "net", "3-sun", "2K2", "triangle", "hole"};

inline std::optional<ObstructionTemplate> template_by_name(std::string_view name, Vertex size = 0) {
  if (name == "P4") return obstruction::p4();
  if (name == "C4") return obstruction::c4();
  if (name == "claw") return obstruction::claw();
  if (name == "net") return obstruction::net();
  if (name == "3-sun") return obstruction::sun3();
  if (name == "2K2") return obstruction::two_k2();
  if (name == "triangle") return obstruction::triangle();
  if (name == "hole" && size >= 4) return obstruction::hole(size);
  return std::nullopt;
}

/// True iff s (distinct vertices of g, in template order) induces exactly t
/// with s[i] playing template vertex i.
inline bool induces_exactly(const Graph& g, std::span<const Vertex> s, const ObstructionTemplate& t) {
  if (static_cast<Vertex>(s.size()) != t.size) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return false;
      if (g.has_edge(s[i], s[j]) != t.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) return false;
    }
  }
  return true;
}

/// Arranges the vertex set s so that it induces t position by position.
/// Holes are handled by walking the cycle; other templates by permutation.
inline std::optional<std::vector<Vertex>> match_template(const Graph& g, std::span<const Vertex> s,
                                                         const ObstructionTemplate& t) {
  if (static_cast<Vertex>(s.size()) != t.size) return std::nullopt;
  std::vector<Vertex> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return std::nullopt;
  for (Vertex x : v)
    if (x < 0 || x >= g.vertex_count()) return std::nullopt;
  if (t.name == "hole" || t.size > 8) {
    // Every induced degree is 2 and the walk from v[0] closes after |s| steps.
    auto induced_nbrs = [&](Vertex x) {
      std::vector<Vertex> out;
      for (Vertex y : v)
        if (g.has_edge(x, y)) out.push_back(y);
      return out;
    };
    for (Vertex x : v)
      if (induced_nbrs(x).size() != 2) return std::nullopt;
    std::vector<Vertex> cycle{v[0]};
    Vertex prev = kNoVertex, cur = v[0];
    while (true) {
      auto nb = induced_nbrs(cur);
      Vertex next = nb[0] != prev ? nb[0] : nb[1];
      if (next == v[0]) break;
      cycle.push_back(next);
      prev = std::exchange(cur, next);
    }
    if (cycle.size() != v.size()) return std::nullopt;
    return cycle;
  }
  do {
    if (induces_exactly(g, v, t)) return v;
  } while (std::next_permutation(v.begin(), v.end()));
  return std::nullopt;
}

/// Name of the template the set induces among the candidates, with the
/// matching arrangement. Holes of length >= 5 are tried when "hole" is listed.
struct Classified {
  ObstructionTemplate tmpl;
  std::vector<Vertex> vertices;
};

inline std::optional<Classified> classify_obstruction(const Graph& g, std::span<const Vertex> s,
                                                      std::span<const std::string_view> candidates) {
  for (auto name : candidates) {
    auto t = template_by_name(name, static_cast<Vertex>(s.size()));
    if (!t || t->size != static_cast<Vertex>(s.size())) continue;
    if (t->name == "hole" && t->size == 4) continue;  // reported as C4
    if (auto m = match_template(g, s, *t)) return Classified{std::move(*t), std::move(*m)};
  }
  return std::nullopt;
}

/// Lexicographically first vertex subset inducing t, arranged per template.
/// Exhaustive; meant for small graphs.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& g, const ObstructionTemplate& t) {
  const Vertex n = g.vertex_count(), k = t.size;
  if (k > n || k <= 0) return std::nullopt;
  std::vector<Vertex> want_deg(static_cast<std::size_t>(k), 0);
  for (auto [a, b] : t.edges) ++want_deg[a], ++want_deg[b];
  std::sort(want_deg.begin(), want_deg.end());
  std::vector<Vertex> pick(static_cast<std::size_t>(k));
  for (Vertex i = 0; i < k; ++i) pick[i] = i;
  std::vector<Vertex> deg(static_cast<std::size_t>(k));
  while (true) {
    for (Vertex i = 0; i < k; ++i) {
      deg[i] = 0;
      for (Vertex j = 0; j < k; ++j) deg[i] += g.has_edge(pick[i], pick[j]) ? 1 : 0;
    }
    std::sort(deg.begin(), deg.end());
    if (deg == want_deg)
      if (auto m = match_template(g, pick, t)) return m;
    Vertex i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (Vertex j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace certrec

#endif  // CERTREC_OBSTRUCTIONS_HPP
