#include <gtest/gtest.h>

#include "certrec/oracles.hpp"
#include "test_support.hpp"

using namespace certrec;
using namespace certrec::testing;

namespace {

bool member(const Graph& g, OracleClass c) { return oracle_membership(g, c); }

}  // namespace

TEST(Oracle, SmallClassics) {
  EXPECT_TRUE(member(path(3), OracleClass::star));
  EXPECT_FALSE(member(path(4), OracleClass::star));
  EXPECT_TRUE(member(Graph(3, {}), OracleClass::star));
  EXPECT_FALSE(member(clique(3), OracleClass::star));

  EXPECT_TRUE(member(clique(4), OracleClass::split));
  EXPECT_FALSE(member(cycle(4), OracleClass::split));
  EXPECT_TRUE(member(path(4), OracleClass::split));
  EXPECT_FALSE(member(cycle(5), OracleClass::split));

  EXPECT_TRUE(member(path(4), OracleClass::bipartite_chain));
  EXPECT_FALSE(member(path(5), OracleClass::bipartite_chain));
  EXPECT_FALSE(member(clique(3), OracleClass::bipartite_chain));
  EXPECT_TRUE(member(cycle(4), OracleClass::bipartite_chain));

  EXPECT_FALSE(member(path(4), OracleClass::trivially_perfect));
  EXPECT_FALSE(member(cycle(4), OracleClass::trivially_perfect));
  EXPECT_TRUE(member(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}), OracleClass::trivially_perfect));

  EXPECT_TRUE(member(path(6), OracleClass::unit_interval));
  EXPECT_FALSE(member(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}), OracleClass::unit_interval));
  EXPECT_FALSE(member(cycle(4), OracleClass::unit_interval));

  EXPECT_TRUE(member(path(5), OracleClass::chordal));
  EXPECT_FALSE(member(cycle(5), OracleClass::chordal));
  EXPECT_TRUE(member(cycle(4), OracleClass::cocomparability));
  EXPECT_FALSE(member(cycle(6), OracleClass::cocomparability));
}

TEST(Oracle, NetAndSunAreChordalButNotUig) {
  const Graph net = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  const Graph sun = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
  for (const Graph* g : {&net, &sun}) {
    EXPECT_TRUE(member(*g, OracleClass::chordal));
    EXPECT_FALSE(member(*g, OracleClass::unit_interval));
  }
}

TEST(Oracle, SizeGuard) {
  EXPECT_THROW(member(path(13), OracleClass::star), OracleSizeError);
  EXPECT_THROW(member(path(10), OracleClass::cocomparability), OracleSizeError);
  EXPECT_NO_THROW(member(path(9), OracleClass::cocomparability));
}

TEST(Oracle, CodeEnumeration) {
  EXPECT_EQ(graph_from_code(4, 0).edge_count(), 0U);
  EXPECT_EQ(graph_from_code(4, 63).edge_count(), 6U);
  EXPECT_TRUE(graph_from_code(3, 1).has_edge(0, 1));
  EXPECT_TRUE(graph_from_code(3, 4).has_edge(1, 2));
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(generate_uig(30, 0.2, 7).graph, generate_uig(30, 0.2, 7).graph);
  EXPECT_EQ(generate_tpg(30, 7), generate_tpg(30, 7));
  EXPECT_EQ(generate_random(20, 0.3, 3), generate_random(20, 0.3, 3));
  EXPECT_EQ(generate_bipartite_chain(4, 5, 1), generate_bipartite_chain(4, 5, 1));
  EXPECT_EQ(generate_tpg(1, 0).vertex_count(), 1);
  EXPECT_EQ(generate_tpg(1, 0).edge_count(), 0U);
}

TEST(Generators, ProduceMembers) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 9);
    EXPECT_TRUE(member(generate_uig(n, 0.4, seed).graph, OracleClass::unit_interval)) << seed;
    EXPECT_TRUE(member(generate_tpg(n, seed, 3, 0.2), OracleClass::trivially_perfect)) << seed;
    EXPECT_TRUE(member(generate_bipartite_chain(n / 2, n - n / 2, seed), OracleClass::bipartite_chain)) << seed;
  }
}

TEST(Generators, FullChainIsFigureFour) {
  const Graph g = generate_bipartite_chain(3, 3, 0, true);
  EXPECT_EQ(g.edge_count(), 6U);
  EXPECT_TRUE(g.has_edge(0, 3) && g.has_edge(0, 4) && g.has_edge(0, 5));
  EXPECT_TRUE(g.has_edge(1, 4) && g.has_edge(1, 5) && g.has_edge(2, 5));
}

TEST(Generators, UigDensityAndRealizer) {
  auto u = generate_uig(400, 0.05, 11);
  const double pairs = 400.0 * 399 / 2;
  const double d = static_cast<double>(u.graph.edge_count()) / pairs;
  EXPECT_GT(d, 0.03);
  EXPECT_LT(d, 0.07);
  EXPECT_EQ(u.realizer.graph(), u.graph);
  auto fixed = uig_from_endpoints({0, 1, 2, 3}, 1);
  EXPECT_EQ(fixed.graph, path(4));
}

TEST(Generators, TpgDepthBoundsEdges) {
  const Graph g = generate_tpg(2000, 5, 4, 0.02);
  EXPECT_LE(g.edge_count(), 4U * 2000);
  EXPECT_THROW(generate_tpg(0, 1), std::invalid_argument);
  EXPECT_THROW(generate_uig(5, 0.0, 1), std::invalid_argument);
}

TEST(Generators, ConstructionRules) {
  Graph g = tpg_add_universal(tpg_disjoint_union(tpg_single(), tpg_add_universal(tpg_single())));
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4U);
  EXPECT_TRUE(member(g, OracleClass::trivially_perfect));
}

TEST(OrderingSearch, FindsCocompOrder) {
  auto o = exhaustive_ordering_search(cycle(4), {patterns::cocomp});
  ASSERT_TRUE(o.has_value());
  EXPECT_TRUE(avoids_bruteforce(cycle(4), *o, std::array{patterns::cocomp}));
  EXPECT_FALSE(exhaustive_ordering_search(cycle(5), {patterns::chordal}).has_value());
}
