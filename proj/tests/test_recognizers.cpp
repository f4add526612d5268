#include <gtest/gtest.h>

#include "certrec/certrec.hpp"
#include "certrec/oracles.hpp"
#include "test_support.hpp"

using namespace certrec;
using namespace certrec::testing;

namespace {

OracleClass oracle_of(GraphClass c) {
  switch (c) {
    case GraphClass::star: return OracleClass::star;
    case GraphClass::split: return OracleClass::split;
    case GraphClass::bipartite_chain: return OracleClass::bipartite_chain;
    case GraphClass::trivially_perfect: return OracleClass::trivially_perfect;
    case GraphClass::unit_interval: return OracleClass::unit_interval;
  }
  return OracleClass::star;
}

void expect_sound(const Graph& g, const Verdict& v) {
  auto r = verify_certificate(g, v);
  EXPECT_TRUE(r) << class_name(v.graph_class) << ": " << (r ? "" : r.witness());
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Star, Examples) {
  auto k13 = recognize_star(star(3));
  EXPECT_TRUE(k13.member);
  EXPECT_EQ(seq(*k13.certificate.order), (std::vector<Vertex>{3, 2, 1, 0}));
  expect_sound(star(3), k13);
  auto p4 = recognize_star(path(4));
  EXPECT_FALSE(p4.member);
  ASSERT_TRUE(p4.certificate.violation);
  EXPECT_EQ(p4.certificate.violation->pattern, "STAR");
  expect_sound(path(4), p4);
  EXPECT_TRUE(recognize_star(Graph(1, {})).member);
  EXPECT_TRUE(recognize_star(Graph()).member);
  auto tri = recognize_star(clique(3));
  EXPECT_FALSE(tri.member);
  EXPECT_EQ(tri.certificate.obstruction, "triangle");
  auto two = recognize_star(build_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(two.certificate.obstruction, "2K2");
}

TEST(Split, Examples) {
  auto k4 = recognize_split(clique(4));
  EXPECT_TRUE(k4.member);
  ASSERT_TRUE(k4.certificate.partition);
  EXPECT_TRUE(k4.certificate.partition->first.empty());
  EXPECT_EQ(k4.certificate.partition->second, (VertexSet{0, 1, 2, 3}));
  auto c4 = recognize_split(cycle(4));
  EXPECT_FALSE(c4.member);
  EXPECT_EQ(c4.certificate.obstruction, "C4");
  expect_sound(cycle(4), c4);
  auto k13 = recognize_split(star(3));
  EXPECT_TRUE(k13.member);
  EXPECT_EQ(k13.certificate.partition->second.size(), 2U);
  expect_sound(star(3), k13);
  auto c5 = recognize_split(cycle(5));
  EXPECT_EQ(c5.certificate.obstruction, "hole");
  expect_sound(cycle(5), c5);
}

TEST(Chain, Examples) {
  auto f = recognize_bipartite_chain(fig4());
  EXPECT_TRUE(f.member);
  EXPECT_EQ(seq(*f.certificate.order), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(f.certificate.partition->first, (VertexSet{0, 1, 2}));
  EXPECT_EQ(f.certificate.partition->second, (VertexSet{3, 4, 5}));
  expect_sound(fig4(), f);
  auto k2k2 = recognize_bipartite_chain(build_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(k2k2.member);
  EXPECT_EQ(k2k2.certificate.obstruction, "2K2");
  EXPECT_TRUE(recognize_bipartite_chain(path(2)).member);
  auto tri = recognize_bipartite_chain(clique(3));
  EXPECT_EQ(tri.certificate.obstruction, "triangle");
  auto c5 = recognize_bipartite_chain(cycle(5));
  EXPECT_FALSE(c5.member);
  expect_sound(cycle(5), c5);
}

TEST(Tpg, Examples) {
  auto p4 = recognize_trivially_perfect(path(4));
  EXPECT_FALSE(p4.member);
  EXPECT_EQ(p4.certificate.obstruction, "P4");
  EXPECT_EQ(sorted(p4.certificate.vertices), (std::vector<Vertex>{0, 1, 2, 3}));
  auto c4 = recognize_trivially_perfect(cycle(4));
  EXPECT_EQ(c4.certificate.obstruction, "C4");
  EXPECT_EQ(sorted(c4.certificate.vertices), (std::vector<Vertex>{0, 1, 2, 3}));
  const Graph g = tpg_add_universal(star(3));
  auto ok = recognize_trivially_perfect(g);
  EXPECT_TRUE(ok.member);
  EXPECT_EQ(ok.certificate.kind, CertificateKind::tree);
  expect_sound(g, ok);
  auto b = recognize_trivially_perfect(bull());
  EXPECT_EQ(b.certificate.obstruction, "P4");
  EXPECT_TRUE(induces_exactly(bull(), b.certificate.vertices, obstruction::p4()));
}

TEST(Tpg, CountersTrackProperAncestors) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate_tpg(40, seed, 4, 0.1);
    auto run = run_tpg_dfs(g, true);
    EXPECT_FALSE(run.failure);
    EXPECT_EQ(run.checks.size(), static_cast<std::size_t>(g.vertex_count()));
    for (auto [path, anc] : run.checks) EXPECT_EQ(path, anc);
  }
}

TEST(Tpg, DisconnectedInputGetsComponents) {
  const Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {4, 6}});
  auto v = recognize_trivially_perfect(g);
  EXPECT_FALSE(v.member);
  ASSERT_EQ(v.components.size(), 2U);
  EXPECT_FALSE(v.components[0].member);
  EXPECT_TRUE(v.components[1].member);
  EXPECT_EQ(v.components[1].component_vertices, (std::vector<Vertex>{4, 5, 6}));
  expect_sound(g, v);
}

TEST(Uig, Examples) {
  auto p5 = recognize_unit_interval(path(5));
  EXPECT_TRUE(p5.member);
  auto o = seq(*p5.certificate.order);
  EXPECT_TRUE(o == (std::vector<Vertex>{0, 1, 2, 3, 4}) || o == (std::vector<Vertex>{4, 3, 2, 1, 0}));
  auto claw = recognize_unit_interval(star(3));
  EXPECT_FALSE(claw.member);
  EXPECT_EQ(claw.certificate.obstruction, "claw");
  EXPECT_EQ(sorted(claw.certificate.vertices), (std::vector<Vertex>{0, 1, 2, 3}));
  for (const Graph& g : {net(), sun3(), cycle(4), cycle(6), bull()}) {
    auto v = recognize_unit_interval(g);
    EXPECT_EQ(v.member, oracle_membership(g, OracleClass::unit_interval));
    expect_sound(g, v);
  }
  EXPECT_EQ(recognize_unit_interval(cycle(4)).certificate.obstruction, "C4");
  EXPECT_TRUE(recognize_unit_interval(clique(5)).member);
}

TEST(Uig, TraceAndAnchor) {
  auto t = trace_unit_interval(path(5));
  EXPECT_TRUE(t.anchor == 0 || t.anchor == 4);
  EXPECT_EQ(t.pass2.order[0], t.anchor);
  EXPECT_THROW(trace_unit_interval(Graph(2, {})), std::invalid_argument);
}

TEST(Uig, ReplayFindsBreakOnNonMembers) {
  auto t = trace_unit_interval(star(3));
  auto r = replay_invariant(star(3), t.pass2.order);
  EXPECT_FALSE(r.holds);
  auto u = generate_uig(40, 0.2, 3).graph;
  if (is_connected(u)) {
    EXPECT_TRUE(replay_invariant(u, trace_unit_interval(u).pass2.order).holds);
  }
}

TEST(Uig, MinBfsIsPathButMinDfsTreeMayBranch) {
  // Triangle 2,3,4 with 1 seeing the twins 2 and 4, and a pendant 0 on 1.
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto t = trace_unit_interval(g);
  ASSERT_EQ(t.anchor, 3);
  for (Vertex k = 1; k < 5; ++k) EXPECT_TRUE(g.has_edge(t.pass2.order[k - 1], t.pass2.order[k]));
  auto dfs = run_search(g, min_dfs(t.anchor));
  EXPECT_EQ(seq(dfs.order), (std::vector<Vertex>{3, 2, 1, 0, 4}));
  EXPECT_EQ(dfs.tree.parent[4], 1);
}

TEST(Uig, DisconnectedConcatenates) {
  const Graph g = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  auto v = recognize_unit_interval(g);
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.components.size(), 2U);
  expect_sound(g, v);
  const Graph bad = tpg_disjoint_union(path(3), star(3));
  auto w = recognize_unit_interval(bad);
  EXPECT_FALSE(w.member);
  EXPECT_EQ(sorted(w.certificate.vertices), (std::vector<Vertex>{3, 4, 5, 6}));
  expect_sound(bad, w);
}

TEST(AllClasses, AgreeWithOraclesOnFiveVertices) {
  for (std::uint64_t code = 0; code < 1024; ++code) {
    const Graph g = graph_from_code(5, code);
    for (GraphClass c : kAllClasses) {
      auto v = recognize(g, c);
      ASSERT_EQ(v.member, oracle_membership(g, oracle_of(c))) << class_name(c) << " code " << code;
      expect_sound(g, v);
    }
  }
}

TEST(AllClasses, AgreeOnGeneratedMembers) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 4 + static_cast<Vertex>(seed % 8);
    auto u = generate_uig(n, 0.35, seed).graph;
    EXPECT_TRUE(recognize_unit_interval(u).member);
    auto t = generate_tpg(n, seed, 3, 0.15);
    EXPECT_TRUE(recognize_trivially_perfect(t).member);
    auto c = generate_bipartite_chain(n / 2, n - n / 2, seed);
    EXPECT_TRUE(recognize_bipartite_chain(c).member);
  }
}
