#pragma once

// Exhaustive ground-truth oracles: cycles of a given order, longest paths,
// Hamiltonicity and A-paths. Everything here is exponential and meant for
// the small orders the rest of the library works at.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"

namespace evenpath {

/// Graphs up to this order use the bitmask DP for longest paths and
/// Hamiltonian cycles (2^n words of memory); larger ones fall back to DFS.
inline constexpr int dp_vertex_cap = 24;

enum class path_mode { exact, at_least };

namespace detail {

constexpr std::uint64_t bit(vertex v) { return std::uint64_t{1} << v; }
constexpr std::uint64_t above(vertex v) { return ~((std::uint64_t{2} << v) - 1); }

// Cycles are reported as (s, w_1, ..., w_{l-1}) with s the smallest vertex
// and w_1 < w_{l-1}; exploring neighbours in increasing order therefore
// finds the lexicographically least such sequence first.
struct cycle_dfs {
  const graph& g;
  int target;
  bool exact;
  vertex anchor = 0;
  std::vector<vertex> path;

  bool run(vertex x, std::uint64_t allowed) {
    const int depth = static_cast<int>(path.size());
    if (exact && depth == target - 1) {
      const std::uint64_t cand = g.row(x) & g.row(anchor) & allowed & above(path[1]);
      if (!cand) return false;
      path.push_back(std::countr_zero(cand));
      return true;
    }
    if (!exact && depth >= target && g.adjacent(x, anchor) && x > path[1]) return true;
    if (depth + std::popcount(allowed) < target) return false;
    for (vertex w : vertex_set(g.row(x) & allowed)) {
      path.push_back(w);
      if (run(w, allowed & ~bit(w))) return true;
      path.pop_back();
    }
    return false;
  }

  std::optional<cycle_certificate> search() {
    const int n = g.order();
    for (vertex s = 0; s + target <= n; ++s) {
      anchor = s;
      path.assign(1, s);
      const std::uint64_t allowed = g.vertices().bits() & above(s);
      if (run(s, allowed)) return cycle_certificate{path};
    }
    return std::nullopt;
  }
};

inline bool path_of_order_rec(const graph& g, vertex x, vertex target, std::uint64_t allowed, int need) {
  if (need == 0) return g.adjacent(x, target);
  if (need == 1) return (g.row(x) & g.row(target) & allowed) != 0;
  if (std::popcount(allowed) < need) return false;
  for (vertex w : vertex_set(g.row(x) & allowed))
    if (path_of_order_rec(g, w, target, allowed & ~bit(w), need - 1)) return true;
  return false;
}

/// ends[mask] = set of v such that G[mask] has a Hamiltonian path ending at v.
inline std::vector<std::uint32_t> path_end_table(const graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::uint32_t e = ends[mask];
    if (!e) continue;
    for (vertex v : vertex_set(e))
      for (vertex w : vertex_set(g.row(v) & ~mask)) ends[mask | bit(w)] |= std::uint32_t{1} << w;
  }
  return ends;
}

inline path_certificate longest_path_dp(const graph& g) {
  const auto ends = path_end_table(g);
  int best = 0;
  for (std::uint64_t mask = 1; mask < ends.size(); ++mask)
    if (ends[mask]) best = std::max(best, std::popcount(mask));

  // Greedy reconstruction inside each candidate vertex set gives its
  // lexicographically least Hamiltonian path; keep the least overall.
  std::optional<path_certificate> winner;
  std::vector<vertex> seq;
  for (std::uint64_t mask = 1; mask < ends.size(); ++mask) {
    if (!ends[mask] || std::popcount(mask) != best) continue;
    seq.clear();
    std::uint64_t rest = mask;
    std::uint64_t cand = ends[mask];
    bool better = false;
    while (rest) {
      const vertex v = std::countr_zero(cand);
      const std::size_t i = seq.size();
      if (winner && !better) {
        const vertex w = winner->vertices[i];
        if (v > w) break;
        if (v < w) better = true;
      }
      seq.push_back(v);
      rest &= ~bit(v);
      cand = rest ? (g.row(v) & ends[rest]) : 0;
    }
    if (static_cast<int>(seq.size()) != best) continue;
    if (!winner || better) winner = path_certificate{seq};
  }
  return *winner;
}

struct longest_dfs {
  const graph& g;
  std::vector<vertex> path;
  std::vector<vertex> best;

  void run(vertex x, std::uint64_t allowed) {
    if (path.size() > best.size()) best = path;
    if (path.size() + static_cast<std::size_t>(reachable(g, x, vertex_set(allowed | bit(x))).size()) - 1 <=
        best.size())
      return;
    for (vertex w : vertex_set(g.row(x) & allowed)) {
      path.push_back(w);
      run(w, allowed & ~bit(w));
      path.pop_back();
    }
  }
};

inline path_certificate longest_path_dfs(const graph& g) {
  longest_dfs dfs{g, {}, {}};
  for (vertex s = 0; s < g.order(); ++s) {
    if (static_cast<int>(dfs.best.size()) == g.order()) break;
    dfs.path.assign(1, s);
    dfs.run(s, g.vertices().bits() & ~bit(s));
  }
  return path_certificate{dfs.best};
}

struct a_path_dfs {
  const graph& g;
  std::uint64_t ends;
  int order;
  path_mode mode;
  std::vector<vertex> path;

  bool run(vertex x, std::uint64_t allowed) {
    const int depth = static_cast<int>(path.size());
    if (((ends >> x) & 1u) && (mode == path_mode::exact ? depth == order : depth >= order)) return true;
    if (mode == path_mode::exact && depth >= order) return false;
    for (vertex w : vertex_set(g.row(x) & allowed)) {
      path.push_back(w);
      if (run(w, allowed & ~bit(w))) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// A cycle of order exactly `l`, lexicographically least in canonical form.
inline std::optional<cycle_certificate> find_cycle_exact(const graph& g, int l) {
  if (l < 3) throw std::invalid_argument("cycle order must be >= 3");
  if (l > g.order()) return std::nullopt;
  return detail::cycle_dfs{g, l, true}.search();
}

/// Some cycle of order >= `l`.
inline std::optional<cycle_certificate> find_cycle_at_least(const graph& g, int l) {
  if (l < 3) throw std::invalid_argument("cycle order must be >= 3");
  if (l > g.order()) return std::nullopt;
  return detail::cycle_dfs{g, l, false}.search();
}

/// True iff G has a u-v path on exactly `order` vertices. This is the hot test
/// behind C_l-freeness filtering: adding edge uv closes a C_l iff it holds with order l.
inline bool has_path_of_order(const graph& g, vertex u, vertex v, int order) {
  if (u == v || order < 2) return false;
  const std::uint64_t allowed = g.vertices().bits() & ~detail::bit(u) & ~detail::bit(v);
  return detail::path_of_order_rec(g, u, v, allowed, order - 2);
}

/// Maximum-order path; ties broken towards the lexicographically least sequence.
inline path_certificate longest_path(const graph& g) {
  if (g.order() < 1) throw std::invalid_argument("longest_path needs at least one vertex");
  return g.order() <= dp_vertex_cap ? detail::longest_path_dp(g) : detail::longest_path_dfs(g);
}

inline std::optional<path_certificate> find_a_path_bruteforce(const graph& g, vertex_set a, int order,
                                                             path_mode mode) {
  detail::require_subset(g, a, "A");
  if (order < 1) throw std::invalid_argument("path order must be >= 1");
  if (order > g.order()) return std::nullopt;
  detail::a_path_dfs dfs{g, a.bits(), order, mode, {}};
  for (vertex s : a) {
    dfs.path.assign(1, s);
    if (dfs.run(s, g.vertices().bits() & ~detail::bit(s))) return path_certificate{dfs.path};
  }
  return std::nullopt;
}

/// A Hamiltonian cycle starting at vertex 0, via bitmask DP (DFS above the DP cap).
inline std::optional<cycle_certificate> hamiltonian_cycle(const graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("Hamiltonicity is defined for order >= 3");
  if (n > dp_vertex_cap) return find_cycle_exact(g, n);

  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint64_t mask = 1; mask < reach.size(); mask += 2) {
    const std::uint32_t e = reach[mask];
    if (!e) continue;
    for (vertex v : vertex_set(e))
      for (vertex w : vertex_set(g.row(v) & ~mask)) reach[mask | detail::bit(w)] |= std::uint32_t{1} << w;
  }
  std::uint64_t mask = reach.size() - 1;
  const std::uint32_t closing = reach[mask] & static_cast<std::uint32_t>(g.row(0));
  if (!closing) return std::nullopt;

  std::vector<vertex> back;
  vertex cur = std::countr_zero(closing);
  while (cur != 0) {
    back.push_back(cur);
    mask &= ~detail::bit(cur);
    const std::uint32_t prev = reach[mask] & static_cast<std::uint32_t>(g.row(cur));
    cur = std::countr_zero(prev);
  }
  cycle_certificate c;
  c.vertices.push_back(0);
  c.vertices.insert(c.vertices.end(), back.rbegin(), back.rend());
  return c;
}

inline bool is_hamiltonian(const graph& g) { return hamiltonian_cycle(g).has_value(); }

}  // namespace evenpath
