#include <gtest/gtest.h>

#include "certrec/oracles.hpp"
#include "certrec/search.hpp"
#include "test_support.hpp"

using namespace certrec;
using namespace certrec::testing;

TEST(Search, MaxDfsOnP4) {
  auto r = run_search(path(4), max_dfs());
  EXPECT_EQ(seq(r.order), (std::vector<Vertex>{1, 2, 3, 0}));
  EXPECT_EQ(r.tree.parent, (std::vector<Vertex>{1, kNoVertex, 1, 2}));
  EXPECT_EQ(r.tree.roots, (std::vector<Vertex>{1}));
}

TEST(Search, MinBfsOnP5FromEnd) {
  EXPECT_EQ(seq(run_search(path(5), min_bfs(0)).order), (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Search, MinBfsOnFig4Complement) {
  EXPECT_EQ(seq(run_search(complement(fig4()), min_bfs()).order), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(Search, RestartsFollowPriority) {
  // Components {0,1} and {2,3,4} (a P3 centred at 3).
  const Graph g = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  auto r = run_search(g, max_bfs());
  EXPECT_EQ(seq(r.order), (std::vector<Vertex>{3, 2, 4, 0, 1}));
  EXPECT_EQ(r.tree.roots, (std::vector<Vertex>{3, 0}));
  auto s = run_search(g, min_dfs(4));
  EXPECT_EQ(seq(s.order), (std::vector<Vertex>{4, 3, 2, 0, 1}));
}

TEST(Search, PreferredRoots) {
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  std::vector<Vertex> roots{3};
  EXPECT_EQ(seq(run_search(g, min_bfs(), roots).order), (std::vector<Vertex>{3, 2, 0, 1}));
  EXPECT_THROW(run_search(g, min_bfs(7)), std::invalid_argument);
}

TEST(Search, TreeParents) {
  const Graph g = generate_random(40, 0.1, 3);
  for (auto spec : {min_bfs(), max_bfs(), min_dfs(), max_dfs()}) {
    auto r = run_search(g, spec);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (r.tree.is_root(v)) continue;
      const Vertex p = r.tree.parent[v];
      EXPECT_LT(r.tree.rank[p], r.tree.rank[v]);
      EXPECT_TRUE(g.has_edge(p, v));
      // BFS: first visited neighbor. DFS: last visited neighbor before v.
      Vertex expect = kNoVertex;
      for (Vertex w : g.sorted_neighbors(v)) {
        if (!r.order.before(w, v)) continue;
        if (expect == kNoVertex || (spec.strategy == Strategy::bfs ? r.order.before(w, expect) : r.order.before(expect, w)))
          expect = w;
      }
      EXPECT_EQ(p, expect);
    }
  }
}

TEST(FourPoint, Examples) {
  EXPECT_TRUE(check_four_point(path(4), VertexOrder({1, 2, 3, 0}), Strategy::dfs));
  auto bad = check_four_point(path(3), VertexOrder({0, 2, 1}), Strategy::bfs);
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.witness(), (Triple{0, 2, 1}));
  for (auto kind : {Strategy::bfs, Strategy::dfs})
    EXPECT_TRUE(check_four_point(Graph(4, {}), VertexOrder({2, 0, 3, 1}), kind));
}

TEST(FourPoint, SearchOutputsSatisfyTheirCondition) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = generate_random(12 + static_cast<Vertex>(seed % 20), 0.15, seed);
    for (auto spec : {min_bfs(), max_bfs(), min_dfs(), max_dfs()}) {
      auto r = run_search(g, spec);
      EXPECT_TRUE(check_four_point(g, r.order, spec.strategy)) << seed;
    }
  }
}

// Brute force: every triple without a witness, first by positions.
TEST(FourPoint, MatchesBruteForce) {
  for (std::uint64_t code = 0; code < 1024; code += 7) {
    const Graph g = graph_from_code(5, code);
    const VertexOrder o({3, 0, 4, 1, 2});
    for (auto kind : {Strategy::bfs, Strategy::dfs}) {
      std::optional<Triple> want;
      for (Vertex i = 0; i < 5 && !want; ++i)
        for (Vertex j = i + 1; j < 5 && !want; ++j)
          for (Vertex k = j + 1; k < 5 && !want; ++k) {
            const Vertex a = o[i], b = o[j], c = o[k];
            if (!g.has_edge(a, c) || g.has_edge(a, b)) continue;
            bool ok = false;
            for (Vertex d = 0; d < 5; ++d) {
              if (!g.has_edge(d, b)) continue;
              if (kind == Strategy::bfs ? o.before(d, a) : (o.before(a, d) && o.before(d, b))) ok = true;
            }
            if (!ok) want = Triple{a, b, c};
          }
      auto got = check_four_point(g, o, kind);
      EXPECT_EQ(got.passed(), !want.has_value()) << code;
      if (want && !got) {
        EXPECT_EQ(got.witness(), *want) << code;
      }
    }
  }
}
