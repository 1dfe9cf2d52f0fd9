#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// They read a graph through `adjacent` into a dense matrix and never call
// the library's search, canonical or spectral code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "evenpath/graph.hpp"

namespace oracle {

using matrix = std::vector<std::vector<bool>>;

inline matrix to_matrix(const evenpath::graph& g) {
  const int n = g.order();
  matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g.adjacent(i, j);
  return m;
}

inline int order(const matrix& m) { return static_cast<int>(m.size()); }

// Extends `path` by unused vertices; calls visit(path) on every simple path.
template <class Visit>
bool extend_paths(const matrix& m, std::vector<int>& path, std::vector<bool>& used, Visit& visit) {
  if (visit(path)) return true;
  const int last = path.back();
  for (int w = 0; w < order(m); ++w) {
    if (used[w] || !m[last][w]) continue;
    used[w] = true;
    path.push_back(w);
    const bool stop = extend_paths(m, path, used, visit);
    path.pop_back();
    used[w] = false;
    if (stop) return true;
  }
  return false;
}

// visit returns true to stop the whole search.
template <class Visit>
bool any_path(const matrix& m, Visit visit) {
  for (int s = 0; s < order(m); ++s) {
    std::vector<int> path{s};
    std::vector<bool> used(m.size(), false);
    used[s] = true;
    if (extend_paths(m, path, used, visit)) return true;
  }
  return false;
}

inline bool has_cycle(const matrix& m, int l) {
  return any_path(m, [&](const std::vector<int>& p) {
    return static_cast<int>(p.size()) == l && l >= 3 && m[p.back()][p.front()];
  });
}

inline bool has_cycle_at_least(const matrix& m, int l) {
  for (int len = std::max(l, 3); len <= order(m); ++len)
    if (has_cycle(m, len)) return true;
  return false;
}

inline int longest_path_order(const matrix& m) {
  int best = 0;
  any_path(m, [&](const std::vector<int>& p) {
    best = std::max(best, static_cast<int>(p.size()));
    return false;
  });
  return best;
}

inline bool has_a_path(const matrix& m, const std::vector<bool>& in_a, int len) {
  return any_path(m, [&](const std::vector<int>& p) {
    return static_cast<int>(p.size()) == len && in_a[p.front()] && in_a[p.back()];
  });
}

inline bool has_path_between(const matrix& m, int u, int v, int len) {
  return any_path(m, [&](const std::vector<int>& p) {
    return static_cast<int>(p.size()) == len && p.front() == u && p.back() == v;
  });
}

inline bool hamiltonian(const matrix& m) {
  const int n = order(m);
  if (n < 3) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = m[perm[i]][perm[(i + 1) % n]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

inline evenpath::graph from_mask(int n, std::uint64_t mask) {
  evenpath::graph g(n);
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if ((mask >> e) & 1u) g.add_edge(i, j);
  return g;
}

inline std::uint64_t power_sum(const matrix& m, int p) {
  std::uint64_t s = 0;
  for (const auto& row : m) {
    std::uint64_t d = static_cast<std::uint64_t>(std::count(row.begin(), row.end(), true)), t = 1;
    for (int i = 0; i < p; ++i) t *= d;
    s += t;
  }
  return s;
}

inline bool isomorphic(const evenpath::graph& g, const evenpath::graph& h, const std::vector<int>& cg = {},
                       const std::vector<int>& ch = {}) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!cg.empty() && cg[i] != ch[perm[i]]) ok = false;
      for (int j = i + 1; j < n && ok; ++j) ok = g.adjacent(i, j) == h.adjacent(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Largest eigenvalue by cyclic Jacobi rotations on the dense matrix.
inline double largest_eigenvalue(const matrix& adj) {
  const int n = order(adj);
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = adj[i][j] ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  double best = n ? a[0][0] : 0;
  for (int i = 0; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

inline evenpath::graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  evenpath::graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace oracle
