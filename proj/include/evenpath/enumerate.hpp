#pragma once

// Labeled graph enumeration. Edge e of the mask is the e-th pair in graph6
// order: (0,1), (0,2), (1,2), (0,3), ... so that e = j(j-1)/2 + i for i < j.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "search.hpp"

namespace evenpath {

inline constexpr int enumeration_vertex_cap = 10;

struct enumeration_stats {
  std::uint64_t visited = 0;
  std::uint64_t accepted = 0;
  bool operator==(const enumeration_stats&) const = default;
};

inline void require_enumerable(int n) {
  if (n < 1 || n > enumeration_vertex_cap)
    throw limit_error("enumeration needs 1 <= n <= " + std::to_string(enumeration_vertex_cap) + ", got " +
                      std::to_string(n));
}

inline std::vector<std::pair<vertex, vertex>> edge_slots(int n) {
  std::vector<std::pair<vertex, vertex>> out;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

inline graph graph_from_mask(int n, std::uint64_t mask) {
  graph g(n);
  int e = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i, ++e)
      if ((mask >> e) & 1u) g.add_edge(i, j);
  return g;
}

/// Calls on_graph for every labeled graph on n vertices in increasing edge-mask
/// order, optionally restricted to those passing `filter`.
inline enumeration_stats enumerate_graphs(int n, const std::function<void(const graph&)>& on_graph,
                                          const std::function<bool(const graph&)>& filter = {}) {
  require_enumerable(n);
  const int edges = n * (n - 1) / 2;
  enumeration_stats st;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
    const graph g = graph_from_mask(n, mask);
    ++st.visited;
    if (filter && !filter(g)) continue;
    ++st.accepted;
    on_graph(g);
  }
  return st;
}

/// Fixed shard layout for an n-vertex enumeration: the top `bits` edges of the
/// mask select the shard. Independent of the thread count.
struct shard_layout {
  int n = 0;
  int edges = 0;
  int bits = 0;

  explicit shard_layout(int n_, int max_bits = 10) : n(n_), edges(n_ * (n_ - 1) / 2) {
    bits = std::min(edges, max_bits);
  }
  std::size_t count() const { return std::size_t{1} << bits; }
};

/// Every labeled graph whose mask has the given top bits, in mask order.
template <class Fn>
void for_each_graph_in_shard(const shard_layout& layout, std::size_t shard, Fn&& fn) {
  const int low = layout.edges - layout.bits;
  const std::uint64_t base = static_cast<std::uint64_t>(shard) << low;
  for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << low); ++rest) fn(graph_from_mask(layout.n, base | rest));
}

namespace detail {

// Hereditary enumeration of C_l-free graphs: edges are decided from the
// highest mask bit down, "absent" before "present", and an edge is only
// added when it closes no C_l with the edges already present. Since every
// superset of a graph containing C_l contains it too, this visits exactly
// the C_l-free masks, in increasing order.
template <class Visitor>
class cycle_free_dfs {
 public:
  cycle_free_dfs(int n, int cycle_order, Visitor& vis)
      : n_(n), cycle_order_(cycle_order), slots_(edge_slots(n)), vis_(vis), g_(n) {
    potential_.resize(slots_.size() + 1);
    for (std::size_t e = 0; e < slots_.size(); ++e) {
      potential_[e + 1] = potential_[e];
      ++potential_[e + 1][static_cast<std::size_t>(slots_[e].first)];
      ++potential_[e + 1][static_cast<std::size_t>(slots_[e].second)];
    }
  }

  /// Runs the subtree whose top `bits` edges are fixed to `shard`.
  void run_shard(int bits, std::uint64_t shard) {
    const int edges = static_cast<int>(slots_.size());
    for (int b = bits - 1; b >= 0; --b) {
      const int e = edges - bits + b;
      if ((shard >> b) & 1u) {
        auto [u, v] = slots_[static_cast<std::size_t>(e)];
        if (has_path_of_order(g_, u, v, cycle_order_)) return;
        g_.add_edge(u, v);
      }
    }
    descend(edges - bits);
  }

 private:
  void descend(int undecided) {
    if (vis_.prune(g_, potential_[static_cast<std::size_t>(undecided)])) return;
    if (undecided == 0) {
      vis_.leaf(g_);
      return;
    }
    descend(undecided - 1);
    auto [u, v] = slots_[static_cast<std::size_t>(undecided - 1)];
    if (!has_path_of_order(g_, u, v, cycle_order_)) {
      g_.add_edge(u, v);
      descend(undecided - 1);
      g_.remove_edge(u, v);
    }
  }

  int n_;
  int cycle_order_;
  std::vector<std::pair<vertex, vertex>> slots_;
  std::vector<std::array<int, max_vertices>> potential_;  // undecided edges per vertex
  Visitor& vis_;
  graph g_;
};

}  // namespace detail

/// Visitor contract for enumerate_cycle_free_shard:
///   bool prune(const graph& g, const std::array<int, 64>& undecided_per_vertex)
///   void leaf(const graph& g)
template <class Visitor>
void enumerate_cycle_free_shard(const shard_layout& layout, int cycle_order, std::size_t shard, Visitor& vis) {
  detail::cycle_free_dfs<Visitor> dfs(layout.n, cycle_order, vis);
  dfs.run_shard(layout.bits, shard);
}

/// Number of labeled C_l-free graphs on n vertices.
inline std::uint64_t count_cycle_free(int n, int cycle_order, int threads = 1) {
  require_enumerable(n);
  struct counter {
    std::uint64_t count = 0;
    bool prune(const graph&, const std::array<int, max_vertices>&) const { return false; }
    void leaf(const graph&) { ++count; }
  };
  const shard_layout layout(n);
  std::vector<std::uint64_t> per_shard(layout.count());
  run_shards(layout.count(), threads, [&](std::size_t s) {
    counter c;
    enumerate_cycle_free_shard(layout, cycle_order, s, c);
    per_shard[s] = c.count;
  });
  std::uint64_t total = 0;
  for (auto c : per_shard) total += c;
  return total;
}

}  // namespace evenpath
