#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace evenpath {

inline constexpr int max_vertices = 64;

using vertex = int;

/// Subset of {0..63} packed into one machine word.
class vertex_set {
 public:
  class iterator {
   public:
    using value_type = vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr vertex_set() = default;
  constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}
  constexpr vertex_set(std::initializer_list<vertex> vs) {
    for (vertex v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr vertex_set first(int n) {
    return vertex_set(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr vertex_set single(vertex v) { return vertex_set(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(vertex v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1u); }
  constexpr void insert(vertex v) {
    if (v < 0 || v >= 64) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(vertex v) {
    if (v >= 0 && v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr vertex lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(vertex_set o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(vertex_set o) const { return (bits_ & o.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr vertex_set operator|(vertex_set o) const { return vertex_set(bits_ | o.bits_); }
  constexpr vertex_set operator&(vertex_set o) const { return vertex_set(bits_ & o.bits_); }
  constexpr vertex_set operator-(vertex_set o) const { return vertex_set(bits_ & ~o.bits_); }
  constexpr vertex_set& operator|=(vertex_set o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr vertex_set& operator&=(vertex_set o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr vertex_set& operator-=(vertex_set o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const vertex_set&) const = default;

  std::vector<vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected simple graph on vertices 0..n-1, n <= 64. Row u holds the
/// neighbourhood of u as a bit mask; rows are kept symmetric and loop-free.
class graph {
 public:
  graph() = default;
  explicit graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0..64");
  }

  static graph from_edges(int n, std::span<const std::pair<vertex, vertex>> edges) {
    graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static graph from_edges(int n, std::initializer_list<std::pair<vertex, vertex>> edges) {
    return from_edges(n, std::span<const std::pair<vertex, vertex>>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  vertex_set vertices() const { return vertex_set::first(n_); }

  bool adjacent(vertex u, vertex v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && ((rows_[u] >> v) & 1u);
  }
  vertex_set neighbors(vertex u) const { return vertex_set(rows_[u]); }
  int degree(vertex u) const { return std::popcount(rows_[u]); }

  int edge_count() const {
    int twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
  }

  void add_edge(vertex u, vertex v) {
    check_pair(u, v);
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(vertex u, vertex v) {
    check_pair(u, v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  /// Row access without bounds checks, for hot loops.
  std::uint64_t row(vertex u) const { return rows_[u]; }

  std::vector<std::pair<vertex, vertex>> edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    for (vertex u = 0; u < n_; ++u)
      for (vertex v : vertex_set(rows_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const graph& o) const {
    if (n_ != o.n_) return false;
    for (int u = 0; u < n_; ++u)
      if (rows_[u] != o.rows_[u]) return false;
    return true;
  }

 private:
  void check_pair(vertex u, vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::array<std::uint64_t, max_vertices> rows_{};
};

namespace detail {

inline void require_subset(const graph& g, vertex_set s, const char* what) {
  if (!s.is_subset_of(g.vertices()))
    throw std::invalid_argument(std::string(what) + " contains a vertex outside the graph");
}

}  // namespace detail

/// Number of edges with both ends in `s`.
inline int edges_within(const graph& g, vertex_set s) {
  detail::require_subset(g, s, "vertex set");
  int twice = 0;
  for (vertex u : s) twice += std::popcount(g.row(u) & s.bits());
  return twice / 2;
}

/// Number of edges with one end in `s` and the other in `t`; s and t must be disjoint.
inline int edges_between(const graph& g, vertex_set s, vertex_set t) {
  detail::require_subset(g, s, "first vertex set");
  detail::require_subset(g, t, "second vertex set");
  if (s.intersects(t)) throw std::invalid_argument("edges_between requires disjoint vertex sets");
  int count = 0;
  for (vertex u : s) count += std::popcount(g.row(u) & t.bits());
  return count;
}

/// A graph together with the label each of its vertices had in the parent graph.
struct relabeled_graph {
  graph g;
  std::vector<vertex> original;  // original[new_label] = old_label

  vertex new_label(vertex old) const {
    for (std::size_t i = 0; i < original.size(); ++i)
      if (original[i] == old) return static_cast<vertex>(i);
    return -1;
  }
};

/// G[s], relabelled to 0..|s|-1 preserving relative order.
inline relabeled_graph induced_subgraph(const graph& g, vertex_set s) {
  detail::require_subset(g, s, "vertex set");
  relabeled_graph out{graph(s.size()), s.to_vector()};
  std::array<int, max_vertices> to_new{};
  for (std::size_t i = 0; i < out.original.size(); ++i) to_new[out.original[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    vertex u = out.original[i];
    for (vertex v : g.neighbors(u) & s)
      if (v > u) out.g.add_edge(static_cast<vertex>(i), to_new[v]);
  }
  return out;
}

inline relabeled_graph remove_vertex(const graph& g, vertex u) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
  return induced_subgraph(g, g.vertices() - vertex_set::single(u));
}

/// Sum over all vertices of d(u)^p, exact; throws std::overflow_error on wraparound.
inline std::uint64_t degree_power_sum(const graph& g, int p) {
  if (p < 1) throw std::invalid_argument("degree power must be >= 1");
  std::uint64_t total = 0;
  for (vertex u = 0; u < g.order(); ++u)
    total = checked::add(total, checked::pow<std::uint64_t>(static_cast<std::uint64_t>(g.degree(u)), p));
  return total;
}

/// Vertices reachable from `start` inside `within`.
inline vertex_set reachable(const graph& g, vertex start, vertex_set within) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (vertex u : vertex_set(frontier)) next |= g.row(u);
    next &= within.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return vertex_set(seen);
}

/// Connected components, ordered by smallest member.
inline std::vector<vertex_set> components(const graph& g) {
  std::vector<vertex_set> out;
  vertex_set left = g.vertices();
  while (!left.empty()) {
    vertex_set c = reachable(g, left.lowest(), left);
    out.push_back(c);
    left -= c;
  }
  return out;
}

inline bool is_connected(const graph& g) {
  return g.order() == 0 || reachable(g, 0, g.vertices()) == g.vertices();
}

// Small named graphs used throughout tests and the CLI.
namespace named {

inline graph complete(int n) {
  graph g(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline graph cycle(int n) {
  graph g(n);
  for (vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

inline graph path(int n) {
  graph g(n);
  for (vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

/// K_{1,leaves} with centre 0.
inline graph star(int leaves) {
  graph g(leaves + 1);
  for (vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline graph petersen() {
  graph g(10);
  for (vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace named
}  // namespace evenpath
