#pragma once

// Exhaustive extremal search over C_{2k+2}-free graphs, the K_k + complement
// of K_{n-k} construction, and a search for sharpness witnesses of the lemma.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "lemma_types.hpp"
#include "parallel.hpp"
#include "search.hpp"

namespace evenpath {

inline constexpr int sharpness_vertex_cap = 7;

/// K_k joined with n-k isolated vertices: vertices 0..k-1 form the clique,
/// every other vertex is adjacent to exactly those k.
inline graph join_construction(int k, int n) {
  if (k < 1 || n < 1 || k >= n)
    throw std::invalid_argument("join construction needs 1 <= k < n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  if (n > max_vertices) throw limit_error("join construction supports at most 64 vertices");
  graph g(n);
  for (vertex u = 0; u < k; ++u)
    for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

struct phi_result {
  int k = 0;
  int p = 0;
  int n = 0;
  std::uint64_t phi = 0;
  std::vector<std::string> extremal;  // canonical graph6, sorted
  std::uint64_t scanned = 0;          // leaves of the pruned search
  std::optional<std::uint64_t> construction;
  std::uint64_t lower_reference = 0;  // k (n-1)^p
  bool operator==(const phi_result&) const = default;
};

namespace detail {

struct phi_visitor {
  int p;
  std::uint64_t floor_value;  // known achievable value; prune below it
  std::uint64_t best = 0;
  bool found = false;
  std::uint64_t scanned = 0;
  std::set<std::string> maximizers;

  std::uint64_t target() const { return std::max(floor_value, best); }

  bool prune(const graph& g, const std::array<int, max_vertices>& undecided) const {
    std::uint64_t bound = 0;
    for (vertex v = 0; v < g.order(); ++v)
      bound += checked::pow<std::uint64_t>(static_cast<std::uint64_t>(g.degree(v) + undecided[static_cast<std::size_t>(v)]), p);
    return bound < target();
  }

  void leaf(const graph& g) {
    ++scanned;
    const std::uint64_t value = degree_power_sum(g, p);
    if (value < target()) return;
    if (!found || value > best) {
      best = value;
      found = true;
      maximizers.clear();
    }
    if (value == best) maximizers.insert(canonical_graph6(g));
  }
};

}  // namespace detail

/// phi(k, p, n): the largest sum of d^p over C_{2k+2}-free graphs on n
/// vertices, with every extremal graph up to isomorphism.
inline phi_result phi_bruteforce(int k, int p, int n, int threads = 1) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  require_enumerable(n);
  const int cycle_order = 2 * k + 2;

  phi_result r{k, p, n};
  r.lower_reference = checked::mul<std::uint64_t>(static_cast<std::uint64_t>(k), checked::pow<std::uint64_t>(static_cast<std::uint64_t>(n - 1), p));
  std::uint64_t floor_value = 0;
  if (n > k) {
    const graph c = join_construction(k, n);
    if (find_cycle_exact(c, cycle_order))
      throw contract_error("join construction contains C_" + std::to_string(cycle_order), to_graph6(c));
    r.construction = degree_power_sum(c, p);
    floor_value = *r.construction;
  }

  const shard_layout layout(n);
  std::vector<detail::phi_visitor> shards(layout.count(), detail::phi_visitor{p, floor_value});
  run_shards(layout.count(), threads,
             [&](std::size_t s) { enumerate_cycle_free_shard(layout, cycle_order, s, shards[s]); });

  std::set<std::string> maximizers;
  bool found = false;
  for (const auto& s : shards) {
    r.scanned += s.scanned;
    if (!s.found) continue;
    if (!found || s.best > r.phi) {
      r.phi = s.best;
      maximizers.clear();
      found = true;
    }
    if (s.best == r.phi) maximizers.insert(s.maximizers.begin(), s.maximizers.end());
  }
  if (!found) throw contract_error("extremal search found no graph", "n=" + std::to_string(n));
  r.extremal.assign(maximizers.begin(), maximizers.end());

  for (const std::string& code : r.extremal) {
    const graph g = from_graph6(code);
    if (find_cycle_exact(g, cycle_order) || degree_power_sum(g, p) != r.phi)
      throw contract_error("extremal witness failed re-verification", code);
  }
  return r;
}

struct trend_row {
  int n = 0;
  std::uint64_t phi = 0;
  double ratio = 0;        // phi / (k n^p)
  double lower_ratio = 0;  // (n-1)^p / n^p
};

/// phi(k, p, n) / (k n^p) for n in [n_min, n_max].
inline std::vector<trend_row> conjecture_trend(int k, int p, int n_min, int n_max, int threads = 1) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("need 1 <= n_min <= n_max");
  require_enumerable(n_max);
  std::vector<trend_row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const phi_result r = phi_bruteforce(k, p, n, threads);
    const double knp = k * std::pow(static_cast<double>(n), p);
    rows.push_back({n, r.phi, static_cast<double>(r.phi) / knp, std::pow((n - 1.0) / n, p)});
  }
  return rows;
}

struct sharpness_witness {
  std::string graph6;     // canonical, vertices of A listed against this labelling
  std::vector<vertex> a;
  auto operator<=>(const sharpness_witness&) const = default;
};

/// Inputs where the lemma's inequality holds with equality yet no A-path of
/// the target order exists, up to isomorphism preserving A.
inline std::vector<sharpness_witness> sharpness_witness_search(int k, lemma_variant variant, int n_max,
                                                               int threads = 1) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n_max < 1 || n_max > sharpness_vertex_cap)
    throw limit_error("sharpness search supports 1 <= n_max <= " + std::to_string(sharpness_vertex_cap));

  std::set<sharpness_witness> all;
  for (int n = 1; n <= n_max; ++n) {
    const shard_layout layout(n, 6);
    std::vector<std::set<sharpness_witness>> found(layout.count());
    run_shards(layout.count(), threads, [&](std::size_t s) {
      for_each_graph_in_shard(layout, s, [&](const graph& g) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          const vertex_set a(mask);
          std::int64_t load = 0;
          for (vertex v : a) load += g.degree(v);
          if (load != condition_rhs(k, variant, static_cast<int>(a.size()), n - static_cast<int>(a.size()))) continue;
          bool has = find_a_path_bruteforce(g, a, 2 * k + 1, path_mode::exact).has_value();
          if (!has && variant == lemma_variant::a) has = find_a_path_bruteforce(g, a, 2 * k, path_mode::exact).has_value();
          if (has) continue;
          std::vector<int> colour(static_cast<std::size_t>(n), 0);
          for (vertex v : a) colour[static_cast<std::size_t>(v)] = 1;
          const std::vector<vertex> order = canonical_order(g, colour);
          sharpness_witness w{to_graph6(relabel(g, order)), {}};
          for (std::size_t i = 0; i < order.size(); ++i)
            if (a.contains(order[i])) w.a.push_back(static_cast<vertex>(i));
          found[s].insert(std::move(w));
        }
      });
    });
    for (auto& f : found) all.insert(f.begin(), f.end());
  }
  return {all.begin(), all.end()};
}

}  // namespace evenpath
