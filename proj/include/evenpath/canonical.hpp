#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace evenpath {

inline constexpr int canonical_vertex_cap = 11;  // upper triangle fits one 64-bit key

namespace detail {

// Colour refinement: cells are ordered by isomorphism-invariant signatures,
// so trying every ordering inside each cell is a valid canonical search.
inline std::vector<int> refine(const graph& g, std::vector<int> colour) {
  const int n = g.order();
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (vertex u = 0; u < n; ++u) {
      auto& s = sig[static_cast<std::size_t>(u)];
      s.push_back(colour[static_cast<std::size_t>(u)]);
      std::vector<int> nb;
      for (vertex v : g.neighbors(u)) nb.push_back(colour[static_cast<std::size_t>(v)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (vertex u = 0; u < n; ++u) next[static_cast<std::size_t>(u)] = rank[sig[static_cast<std::size_t>(u)]];
    const auto distinct = [](std::vector<int> c) {
      std::sort(c.begin(), c.end());
      return std::unique(c.begin(), c.end()) - c.begin();
    };
    if (distinct(next) == distinct(colour)) return next;
    colour = std::move(next);
  }
}

inline std::uint64_t order_key(const graph& g, const std::vector<vertex>& order) {
  std::uint64_t key = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      key = (key << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1u : 0u);
  return key;
}

}  // namespace detail

/// Canonical relabelling: isomorphic (coloured) graphs map to identical graphs.
/// `colour` is an optional vertex colouring that relabellings must respect.
/// Returns the permutation as canon[new] = old.
inline std::vector<vertex> canonical_order(const graph& g, std::vector<int> colour = {}) {
  const int n = g.order();
  if (n > canonical_vertex_cap)
    throw std::invalid_argument("canonical form supports at most " + std::to_string(canonical_vertex_cap) +
                                " vertices");
  if (colour.empty()) colour.assign(static_cast<std::size_t>(n), 0);
  for (vertex u = 0; u < n; ++u) colour[static_cast<std::size_t>(u)] = colour[static_cast<std::size_t>(u)] * 64 + g.degree(u);
  const std::vector<int> cells = detail::refine(g, colour);

  std::vector<vertex> order(static_cast<std::size_t>(n));
  for (vertex u = 0; u < n; ++u) order[static_cast<std::size_t>(u)] = u;
  std::stable_sort(order.begin(), order.end(),
                   [&](vertex x, vertex y) { return cells[static_cast<std::size_t>(x)] < cells[static_cast<std::size_t>(y)]; });
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && cells[static_cast<std::size_t>(order[j])] == cells[static_cast<std::size_t>(order[i])]) ++j;
    if (j - i > 1) ranges.emplace_back(i, j);
    i = j;
  }

  std::vector<vertex> best = order;
  std::uint64_t best_key = detail::order_key(g, order);
  // Odometer over the permutations of every cell.
  for (;;) {
    std::size_t c = 0;
    for (; c < ranges.size(); ++c) {
      auto [lo, hi] = ranges[c];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi))) break;
    }
    if (c == ranges.size()) break;
    const std::uint64_t key = detail::order_key(g, order);
    if (key < best_key) {
      best_key = key;
      best = order;
    }
  }
  return best;
}

inline graph relabel(const graph& g, const std::vector<vertex>& order) {
  graph out(g.order());
  std::vector<vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<vertex>(i);
  for (auto [u, v] : g.edges()) out.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  return out;
}

inline std::string canonical_graph6(const graph& g) { return to_graph6(relabel(g, canonical_order(g))); }

}  // namespace evenpath
