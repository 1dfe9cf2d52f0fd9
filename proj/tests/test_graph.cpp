#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "evenpath/graph.hpp"
#include "evenpath/graph6.hpp"
#include "oracles.hpp"

using namespace evenpath;

TEST(VertexSet, BasicOperations) {
  vertex_set s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.lowest(), 0);
  EXPECT_EQ(s.to_vector(), (std::vector<vertex>{0, 3, 5}));
  EXPECT_EQ((s - vertex_set{0}).to_vector(), (std::vector<vertex>{3, 5}));
  EXPECT_TRUE(vertex_set({3}).is_subset_of(s));
  EXPECT_EQ(vertex_set::first(4).size(), 4);
  EXPECT_EQ(vertex_set::first(64).size(), 64);
  EXPECT_THROW(s.insert(64), std::invalid_argument);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(graph(65), std::invalid_argument);
  EXPECT_FALSE(g.adjacent(0, 7));
}

TEST(Graph, EdgesWithin) {
  EXPECT_EQ(edges_within(named::complete(3), vertex_set{0, 1, 2}), 3);
  EXPECT_EQ(edges_within(named::petersen(), vertex_set{}), 0);
  // P4 0-1-2-3 with S = {0,1,2}: pairs 01 and 12.
  const graph p4 = named::path(4);
  const vertex_set s{0, 1, 2};
  int pairs = 0;
  for (vertex u : s)
    for (vertex v : s)
      if (u < v && p4.adjacent(u, v)) ++pairs;
  EXPECT_EQ(edges_within(p4, s), pairs);
  EXPECT_EQ(edges_within(p4, s), 2);
}

TEST(Graph, EdgesBetween) {
  const graph star = named::star(4);
  EXPECT_EQ(edges_between(star, vertex_set{0}, vertex_set{1, 2, 3, 4}), 4);
  EXPECT_EQ(edges_between(star, vertex_set{0}, vertex_set{}), 0);
  const graph c5 = named::cycle(5);
  EXPECT_EQ(edges_between(c5, vertex_set{0}, vertex_set{2, 3}), 0);
  EXPECT_THROW(edges_between(c5, vertex_set{0, 1}, vertex_set{1, 2}), std::invalid_argument);
  EXPECT_THROW(edges_within(c5, vertex_set{7}), std::invalid_argument);
}

TEST(Graph, EdgeCountsAgreeWithOracleOnRandomPartitions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const graph g = oracle::random_graph(9, 0.5, rng);
    const auto m = oracle::to_matrix(g);
    vertex_set s, t;
    for (vertex v = 0; v < 9; ++v) {
      const auto r = rng() % 3;
      if (r == 0) s.insert(v);
      if (r == 1) t.insert(v);
    }
    int within = 0, between = 0;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        if (i < j && s.contains(i) && s.contains(j) && m[i][j]) ++within;
        if (s.contains(i) && t.contains(j) && m[i][j]) ++between;
      }
    EXPECT_EQ(edges_within(g, s), within);
    EXPECT_EQ(edges_between(g, s, t), between);
  }
}

TEST(Graph, RemoveVertexRelabels) {
  const auto k3 = remove_vertex(named::complete(3), 1);
  EXPECT_EQ(k3.g, named::complete(2));
  EXPECT_EQ(k3.original, (std::vector<vertex>{0, 2}));

  const auto p4 = remove_vertex(named::path(4), 1);
  EXPECT_EQ(p4.g.order(), 3);
  EXPECT_EQ(p4.g.edge_count(), 1);
  EXPECT_TRUE(p4.g.adjacent(p4.new_label(2), p4.new_label(3)));

  const auto star = remove_vertex(named::star(3), 0);
  EXPECT_EQ(star.g, graph(3));
}

TEST(Graph, InducedSubgraphMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const graph g = oracle::random_graph(10, 0.4, rng);
    const vertex_set s(rng() & 0x3ff);
    const auto sub = induced_subgraph(g, s);
    ASSERT_EQ(sub.g.order(), s.size());
    for (int i = 0; i < sub.g.order(); ++i)
      for (int j = 0; j < sub.g.order(); ++j)
        EXPECT_EQ(sub.g.adjacent(i, j), g.adjacent(sub.original[i], sub.original[j]));
  }
}

TEST(Graph, DegreePowerSum) {
  EXPECT_EQ(degree_power_sum(named::cycle(5), 2), 20u);
  EXPECT_EQ(degree_power_sum(named::star(4), 2), 20u);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const graph g = oracle::random_graph(12, 0.3, rng);
    EXPECT_EQ(degree_power_sum(g, 1), 2u * static_cast<std::uint64_t>(g.edge_count()));
    for (int p = 1; p <= 4; ++p) EXPECT_EQ(degree_power_sum(g, p), oracle::power_sum(oracle::to_matrix(g), p));
  }
  EXPECT_THROW(degree_power_sum(named::complete(64), 12), std::overflow_error);
  EXPECT_THROW(degree_power_sum(named::cycle(4), 0), std::invalid_argument);
}

TEST(Graph, Components) {
  graph g = graph::from_edges(7, {{0, 1}, {2, 3}, {3, 4}, {6, 5}});
  const auto cs = components(g);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (vertex_set{0, 1}));
  EXPECT_EQ(cs[1], (vertex_set{2, 3, 4}));
  EXPECT_EQ(cs[2], (vertex_set{5, 6}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(named::petersen()));
}

TEST(Graph, NamedGraphs) {
  const graph p = named::petersen();
  EXPECT_EQ(p.edge_count(), 15);
  for (vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(named::complete(6).edge_count(), 15);
  EXPECT_EQ(named::cycle(7).edge_count(), 7);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(graph(1)), "@");
  EXPECT_EQ(to_graph6(named::complete(2)), "A_");
  EXPECT_EQ(to_graph6(graph(0)), "?");
  EXPECT_EQ(to_graph6(named::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(named::complete(4)), "C~");
  EXPECT_EQ(to_graph6(named::petersen()), "IheA@GUAo");
  EXPECT_EQ(from_graph6("IheA@GUAo"), named::petersen());
}

TEST(Graph6, LongSizeField) {
  const graph g = named::cycle(63);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
  EXPECT_EQ(from_graph6(to_graph6(named::complete(64))), named::complete(64));
}

TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int n = 0; n <= 12; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
      const std::string s = to_graph6(g);
      EXPECT_EQ(from_graph6(s), g) << s;
      EXPECT_EQ(to_graph6(from_graph6(s)), s);
    }
}

TEST(Graph6, RejectsMalformedInput) {
  auto offset_of = [](const std::string& s) -> long {
    try {
      from_graph6(s);
    } catch (const parse_error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("B w"), 1);    // space is below 63
  EXPECT_GE(offset_of("C"), 0);      // truncated
  EXPECT_GE(offset_of("Bww"), 0);    // trailing byte
  EXPECT_GE(offset_of("A`"), 0);     // nonzero padding bits
  EXPECT_EQ(offset_of("Bw\n"), -1);  // trailing newline is tolerated
}

TEST(Graph6, StreamSkipsHeaderAndBlankLines) {
  std::istringstream in(">>graph6<<Bw\n\nC~\r\nA_\n");
  const auto gs = read_graph6_stream(in);
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], named::complete(3));
  EXPECT_EQ(gs[1], named::complete(4));
  EXPECT_EQ(gs[2], named::complete(2));

  std::istringstream bad("Bw\nB!\n");
  EXPECT_THROW(read_graph6_stream(bad), parse_error);
}
