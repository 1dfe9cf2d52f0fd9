#include <gtest/gtest.h>

#include <random>

#include "evenpath/certificate.hpp"
#include "evenpath/enumerate.hpp"
#include "evenpath/search.hpp"
#include "oracles.hpp"

using namespace evenpath;

namespace {

vertex_set mask_set(std::uint64_t m) { return vertex_set(m); }

}  // namespace

TEST(CycleSearch, Examples) {
  const auto c5 = find_cycle_exact(named::cycle(5), 5);
  ASSERT_TRUE(c5);
  EXPECT_TRUE(is_cycle(named::cycle(5), *c5));
  EXPECT_FALSE(find_cycle_exact(named::cycle(5), 4));
  const auto c4 = find_cycle_exact(named::complete(4), 4);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->vertices, (std::vector<vertex>{0, 1, 2, 3}));
  EXPECT_THROW(find_cycle_exact(named::cycle(5), 2), std::invalid_argument);

  EXPECT_EQ(find_cycle_at_least(named::cycle(5), 4)->order(), 5);
  EXPECT_FALSE(find_cycle_at_least(named::star(5), 3));
  const graph triangles = graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(find_cycle_at_least(triangles, 3)->order(), 3);
}

TEST(CycleSearch, PetersenCycleSpectrum) {
  const graph p = named::petersen();
  for (int l : {3, 4, 7, 10}) EXPECT_FALSE(find_cycle_exact(p, l)) << l;
  for (int l : {5, 6, 8, 9}) {
    const auto c = find_cycle_exact(p, l);
    ASSERT_TRUE(c) << l;
    EXPECT_TRUE(is_cycle(p, *c));
    EXPECT_EQ(c->order(), l);
  }
  EXPECT_FALSE(is_hamiltonian(p));
  EXPECT_EQ(longest_path(p).order(), 10);
}

TEST(CycleSearch, AgreesWithOracleOnAllSmallGraphs) {
  for (int n = 3; n <= 6; ++n)
    enumerate_graphs(n, [&](const graph& g) {
      const auto m = oracle::to_matrix(g);
      for (int l = 3; l <= n; ++l) {
        const auto c = find_cycle_exact(g, l);
        ASSERT_EQ(c.has_value(), oracle::has_cycle(m, l));
        if (c) {
          ASSERT_TRUE(is_cycle(g, *c) && c->order() == l);
        }
        const auto d = find_cycle_at_least(g, l);
        ASSERT_EQ(d.has_value(), oracle::has_cycle_at_least(m, l));
        if (d) {
          ASSERT_TRUE(is_cycle(g, *d) && d->order() >= l);
        }
      }
      ASSERT_EQ(is_hamiltonian(g), oracle::hamiltonian(m));
      if (auto h = hamiltonian_cycle(g)) {
        ASSERT_TRUE(is_cycle(g, *h) && h->order() == n);
      }
    });
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_path(named::path(4)).order(), 4);
  EXPECT_EQ(longest_path(named::star(3)).order(), 3);
  EXPECT_EQ(longest_path(graph(1)).order(), 1);
  EXPECT_THROW(longest_path(graph(0)), std::invalid_argument);
}

TEST(LongestPath, DpAndDfsAgreeAndMatchOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const graph g = oracle::random_graph(n, 0.15 + 0.1 * static_cast<double>(rng() % 6), rng);
    const path_certificate dp = detail::longest_path_dp(g);
    const path_certificate dfs = detail::longest_path_dfs(g);
    EXPECT_TRUE(is_path(g, dp));
    EXPECT_EQ(dp.order(), oracle::longest_path_order(oracle::to_matrix(g)));
    // Both return the lexicographically least maximum path.
    EXPECT_EQ(dp, dfs);
  }
}

TEST(LongestPath, LargeGraphsUseDfs) {
  const graph g = named::cycle(30);
  const auto p = longest_path(g);
  EXPECT_EQ(p.order(), 30);
  EXPECT_TRUE(is_path(g, p));
}

TEST(APathSearch, Examples) {
  const auto k3 = find_a_path_bruteforce(named::complete(3), vertex_set{0, 1, 2}, 3, path_mode::exact);
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->vertices, (std::vector<vertex>{0, 1, 2}));
  EXPECT_FALSE(find_a_path_bruteforce(named::star(4), vertex_set{0}, 3, path_mode::exact));
  const auto c5 = find_a_path_bruteforce(named::cycle(5), vertex_set{0, 2}, 3, path_mode::exact);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->vertices, (std::vector<vertex>{0, 1, 2}));
}

TEST(APathSearch, AgreesWithOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const graph g = oracle::random_graph(n, 0.4, rng);
    const vertex_set a = mask_set(rng() & ((std::uint64_t{1} << n) - 1));
    std::vector<bool> in_a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) in_a[v] = a.contains(v);
    const auto m = oracle::to_matrix(g);
    for (int len = 1; len <= n; ++len) {
      const auto p = find_a_path_bruteforce(g, a, len, path_mode::exact);
      ASSERT_EQ(p.has_value(), oracle::has_a_path(m, in_a, len));
      if (p) {
        ASSERT_TRUE(is_a_path(g, a, *p) && p->order() == len);
      }
      const auto q = find_a_path_bruteforce(g, a, len, path_mode::at_least);
      if (q) {
        ASSERT_TRUE(is_a_path(g, a, *q) && q->order() >= len);
      }
    }
  }
}

TEST(PathOfOrder, AgreesWithOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const graph g = oracle::random_graph(n, 0.5, rng);
    const auto m = oracle::to_matrix(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int len = 2; len <= n; ++len)
          ASSERT_EQ(has_path_of_order(g, u, v, len), u != v && oracle::has_path_between(m, u, v, len));
  }
}

TEST(Enumeration, CountsAndCaps) {
  std::uint64_t count = 0;
  EXPECT_EQ(enumerate_graphs(3, [&](const graph&) { ++count; }).visited, 8u);
  EXPECT_EQ(count, 8u);
  EXPECT_EQ(enumerate_graphs(4, [](const graph&) {}).visited, 64u);
  EXPECT_THROW(enumerate_graphs(11, [](const graph&) {}), limit_error);
  EXPECT_THROW(count_cycle_free(0, 4), limit_error);
}

TEST(Enumeration, HereditaryCountMatchesFilteredCount) {
  for (int n = 1; n <= 6; ++n)
    for (int l : {3, 4, 5, 6}) {
      // Independent filter: the matrix oracle, not the library's cycle search.
      const auto st = enumerate_graphs(
          n, [](const graph&) {}, [&](const graph& g) { return !oracle::has_cycle(oracle::to_matrix(g), l); });
      EXPECT_EQ(count_cycle_free(n, l), st.accepted) << n << " " << l;
    }
  EXPECT_EQ(count_cycle_free(5, 4), 548u);
  EXPECT_EQ(count_cycle_free(7, 4), 163440u);
}

TEST(Enumeration, CycleFreeCountIsThreadIndependent) {
  EXPECT_EQ(count_cycle_free(7, 6, 1), count_cycle_free(7, 6, 4));
  EXPECT_EQ(count_cycle_free(7, 6, 1), 601864u);
}

TEST(Enumeration, ShardsCoverEveryMaskOnceInOrder) {
  const shard_layout layout(5, 4);
  std::vector<graph> seen;
  for (std::size_t s = 0; s < layout.count(); ++s)
    for_each_graph_in_shard(layout, s, [&](const graph& g) { seen.push_back(g); });
  ASSERT_EQ(seen.size(), 1024u);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) EXPECT_EQ(seen[mask], oracle::from_mask(5, mask));
}
