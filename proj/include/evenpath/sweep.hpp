#pragma once

// Batch drivers: exhaustive and seeded-random validation of the certified
// finder, and population sweeps for the degree-power bounds. Work is split
// into fixed shards and merged in shard order, so every report is identical
// for any thread count.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "graph6.hpp"
#include "lemma.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "verify.hpp"

namespace evenpath {

inline constexpr std::uint64_t default_seed = 2718281828;
inline constexpr std::size_t max_reported_failures = 20;
inline constexpr int exhaustive_lemma_cap = 6;
inline constexpr int random_lemma_cap = 12;

struct lemma_failure {
  std::string graph6;
  std::vector<vertex> a;
  int k = 0;
  lemma_variant variant{};
  std::string reason;
  std::string dump;
};

struct lemma_tally {
  std::uint64_t inputs = 0;
  std::uint64_t condition_held = 0;
  std::uint64_t certified = 0;
  std::uint64_t oracle_confirmed = 0;
  std::uint64_t rejected = 0;            // precondition_error raised
  std::uint64_t rejected_correctly = 0;  // ... with a margin <= 0 that matches the condition
  std::uint64_t failure_count = 0;
  std::vector<lemma_failure> failures;   // first few only

  void fail(lemma_failure f) {
    ++failure_count;
    if (failures.size() < max_reported_failures) failures.push_back(std::move(f));
  }

  void merge(const lemma_tally& o) {
    inputs += o.inputs;
    condition_held += o.condition_held;
    certified += o.certified;
    oracle_confirmed += o.oracle_confirmed;
    rejected += o.rejected;
    rejected_correctly += o.rejected_correctly;
    failure_count += o.failure_count;
    for (const auto& f : o.failures)
      if (failures.size() < max_reported_failures) failures.push_back(f);
  }
};

/// Runs the finder on one input and cross-checks it. With `probe_rejections`
/// the finder is also called when the condition fails, to check it refuses.
inline void check_lemma_input(const graph& g, vertex_set a, int k, lemma_variant variant, bool probe_rejections,
                              lemma_tally& t) {
  const partition part = partition::from_a(g, a);
  const condition_result cond = condition_holds(g, part, k, variant);
  ++t.inputs;
  auto failure = [&](std::string reason, std::string dump = {}) {
    t.fail({to_graph6(g), a.to_vector(), k, variant, std::move(reason), std::move(dump)});
  };
  const lemma_input in{g, part, k, variant};

  if (!cond.holds) {
    if (!probe_rejections) return;
    try {
      (void)find_certified_a_path(in, lemma_options{false});
      failure("finder accepted an input whose condition fails");
    } catch (const precondition_error& e) {
      ++t.rejected;
      if (e.margin() <= 0 && e.margin() == cond.margin)
        ++t.rejected_correctly;
      else
        failure("rejection margin " + std::to_string(e.margin()) + " disagrees with " + std::to_string(cond.margin));
    }
    return;
  }

  ++t.condition_held;
  try {
    const lemma_result r = find_certified_a_path(in, lemma_options{false});
    if (verify_certificate(g, a, r.path, k, variant))
      ++t.certified;
    else
      failure("certificate rejected by verifier");
  } catch (const contract_error& e) {
    failure(std::string("contract violation: ") + e.what(), e.dump());
  } catch (const std::exception& e) {
    failure(std::string("unexpected error: ") + e.what());
  }

  bool exists = find_a_path_bruteforce(g, a, 2 * k + 1, path_mode::exact).has_value();
  if (!exists && variant == lemma_variant::a) exists = find_a_path_bruteforce(g, a, 2 * k, path_mode::exact).has_value();
  if (exists)
    ++t.oracle_confirmed;
  else
    failure("brute-force search found no A-path of a target order");
}

struct lemma_sweep_row {
  int n = 0;
  bool exhaustive = false;
  lemma_tally tally;
};

struct lemma_sweep_report {
  int n_max = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // per random order
  std::vector<lemma_sweep_row> rows;
  lemma_tally total;

  bool ok() const { return total.failure_count == 0; }
};

/// Every graph on n vertices, every A, every k <= k_max and both variants.
inline lemma_tally exhaustive_lemma_tally(int n, int k_max, int threads, bool probe_rejections = false) {
  if (n < 1 || n > exhaustive_lemma_cap)
    throw limit_error("exhaustive lemma sweep supports 1 <= n <= " + std::to_string(exhaustive_lemma_cap));
  const shard_layout layout(n, 6);
  std::vector<lemma_tally> shards(layout.count());
  run_shards(layout.count(), threads, [&](std::size_t s) {
    for_each_graph_in_shard(layout, s, [&](const graph& g) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        for (int k = 1; k <= k_max; ++k)
          for (lemma_variant v : {lemma_variant::a, lemma_variant::b})
            check_lemma_input(g, vertex_set(mask), k, v, probe_rejections, shards[s]);
    });
  });
  lemma_tally t;
  for (const auto& s : shards) t.merge(s);
  return t;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct random_lemma_input {
  graph g;
  vertex_set a;
  int k;
  lemma_variant variant;
};

// Sample i depends only on (seed, n, i).
inline random_lemma_input sample_lemma_input(int n, int k_max, std::uint64_t seed, std::uint64_t i) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n) << 48 | i)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = 0.1 + 0.85 * unit(rng);
  const double a_share = 0.2 + 0.8 * unit(rng);
  graph g(n);
  for (vertex j = 1; j < n; ++j)
    for (vertex i2 = 0; i2 < j; ++i2)
      if (unit(rng) < density) g.add_edge(i2, j);
  vertex_set a;
  for (vertex v = 0; v < n; ++v)
    if (unit(rng) < a_share) a.insert(v);
  const int k = std::uniform_int_distribution<int>(1, k_max)(rng);
  const lemma_variant variant = unit(rng) < 0.5 ? lemma_variant::a : lemma_variant::b;
  return {std::move(g), a, k, variant};
}

}  // namespace detail

/// Seeded random inputs at order n; the finder is called on every one.
inline lemma_tally certificate_fuzz(int n, std::uint64_t samples, std::uint64_t seed, int k_max, int threads) {
  if (n < 1 || n > random_lemma_cap)
    throw limit_error("random lemma inputs support 1 <= n <= " + std::to_string(random_lemma_cap));
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  constexpr std::uint64_t chunk = 1024;
  const std::size_t shards = static_cast<std::size_t>((samples + chunk - 1) / chunk);
  std::vector<lemma_tally> out(shards);
  run_shards(shards, threads, [&](std::size_t s) {
    const std::uint64_t end = std::min<std::uint64_t>(samples, (s + 1) * chunk);
    for (std::uint64_t i = s * chunk; i < end; ++i) {
      const auto in = detail::sample_lemma_input(n, k_max, seed, i);
      check_lemma_input(in.g, in.a, in.k, in.variant, true, out[s]);
    }
  });
  lemma_tally t;
  for (const auto& s : out) t.merge(s);
  return t;
}

/// Exhaustive for n <= 6, seeded random above.
inline lemma_sweep_report lemma_sweep(int n_max, int k_max, std::uint64_t samples, std::uint64_t seed, int threads) {
  if (n_max < 1 || n_max > random_lemma_cap)
    throw limit_error("lemma sweep supports 1 <= n_max <= " + std::to_string(random_lemma_cap));
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  lemma_sweep_report r{n_max, k_max, seed, samples};
  for (int n = 1; n <= n_max; ++n) {
    lemma_sweep_row row{n, n <= exhaustive_lemma_cap};
    row.tally = row.exhaustive ? exhaustive_lemma_tally(n, k_max, threads) : certificate_fuzz(n, samples, seed, k_max, threads);
    r.total.merge(row.tally);
    r.rows.push_back(std::move(row));
  }
  return r;
}

struct bounds_sweep_options {
  std::vector<int> powers{2, 3, 4};
  bool spectral = false;
  double tol = 1e-9;
};

struct bounds_tally {
  std::uint64_t graphs = 0;
  std::uint64_t theorem1_violations = 0;
  std::uint64_t vertex_violations = 0;
  std::uint64_t edge_bound_violations = 0;
  std::uint64_t edge_quadratic_violations = 0;
  std::map<int, std::uint64_t> corollary1_violations;
  std::uint64_t spectral_checked = 0;
  std::uint64_t spectral_violations = 0;
  std::uint64_t spectral_unconverged = 0;
  std::vector<std::string> examples;  // first few offending graphs

  std::uint64_t violations() const {
    std::uint64_t v = theorem1_violations + vertex_violations + edge_bound_violations + edge_quadratic_violations +
                      spectral_violations + spectral_unconverged;
    for (auto [p, c] : corollary1_violations) v += c;
    return v;
  }

  void merge(const bounds_tally& o) {
    graphs += o.graphs;
    theorem1_violations += o.theorem1_violations;
    vertex_violations += o.vertex_violations;
    edge_bound_violations += o.edge_bound_violations;
    edge_quadratic_violations += o.edge_quadratic_violations;
    for (auto [p, c] : o.corollary1_violations) corollary1_violations[p] += c;
    spectral_checked += o.spectral_checked;
    spectral_violations += o.spectral_violations;
    spectral_unconverged += o.spectral_unconverged;
    for (const auto& e : o.examples)
      if (examples.size() < max_reported_failures) examples.push_back(e);
  }
};

namespace detail {

struct bounds_visitor {
  int k;
  const bounds_sweep_options& opt;
  bounds_tally t;

  bool prune(const graph&, const std::array<int, max_vertices>&) const { return false; }

  void leaf(const graph& g) {
    ++t.graphs;
    bool bad = false;
    const auto [lhs, rhs] = bounds::theorem1_sides(g, k);
    if (lhs > rhs) ++t.theorem1_violations, bad = true;
    if (bounds::theorem1_vertex_violation(g, k)) ++t.vertex_violations, bad = true;
    if (!bounds::edge_bound_holds(g.edge_count(), g.order(), k)) ++t.edge_bound_violations, bad = true;
    if (!bounds::edge_quadratic_holds(g.edge_count(), g.order(), k)) ++t.edge_quadratic_violations, bad = true;
    for (int p : opt.powers)
      if (!bounds::corollary1_holds(degree_power_sum(g, p), g.order(), k, p)) ++t.corollary1_violations[p], bad = true;
    if (opt.spectral) {
      ++t.spectral_checked;
      try {
        if (!bounds::spectral_holds(spectral_radius(g, opt.tol), g.order(), k, opt.tol))
          ++t.spectral_violations, bad = true;
      } catch (const numeric_error&) {
        ++t.spectral_unconverged, bad = true;
      }
    }
    if (bad && t.examples.size() < max_reported_failures) t.examples.push_back(to_graph6(g));
  }
};

}  // namespace detail

/// Checks the bounds on every labeled C_{2k+2}-free graph on n vertices.
inline bounds_tally bounds_sweep(int n, int k, const bounds_sweep_options& opt, int threads) {
  require_enumerable(n);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (int p : opt.powers)
    if (p < 2) throw std::invalid_argument("corollary powers must be >= 2");
  const shard_layout layout(n);
  std::vector<detail::bounds_visitor> shards(layout.count(), detail::bounds_visitor{k, opt, {}});
  for (auto& s : shards)
    for (int p : opt.powers) s.t.corollary1_violations[p] = 0;
  run_shards(layout.count(), threads,
             [&](std::size_t s) { enumerate_cycle_free_shard(layout, 2 * k + 2, s, shards[s]); });
  bounds_tally t;
  for (const auto& s : shards) t.merge(s.t);
  return t;
}

struct erdos_gallai_tally {
  std::uint64_t graphs = 0;
  std::uint64_t applicable = 0;  // 2m > kn
  std::uint64_t verified = 0;
  std::vector<std::string> failures;

  void merge(const erdos_gallai_tally& o) {
    graphs += o.graphs;
    applicable += o.applicable;
    verified += o.verified;
    for (const auto& f : o.failures)
      if (failures.size() < max_reported_failures) failures.push_back(f);
  }
};

/// Every labeled graph on n vertices with 2m > kn must yield a verified path of order k+2.
inline erdos_gallai_tally erdos_gallai_sweep(int n, int k, int threads) {
  require_enumerable(n);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const shard_layout layout(n, 8);
  std::vector<erdos_gallai_tally> shards(layout.count());
  run_shards(layout.count(), threads, [&](std::size_t s) {
    for_each_graph_in_shard(layout, s, [&](const graph& g) {
      auto& t = shards[s];
      ++t.graphs;
      if (2 * static_cast<std::int64_t>(g.edge_count()) <= static_cast<std::int64_t>(k) * n) return;
      ++t.applicable;
      bool ok = false;
      try {
        const auto p = bounds::erdos_gallai_path(g, k);
        ok = p && p->order() == k + 2 && is_path(g, *p);
      } catch (const std::exception&) {
      }
      if (ok)
        ++t.verified;
      else if (t.failures.size() < max_reported_failures)
        t.failures.push_back(to_graph6(g));
    });
  });
  erdos_gallai_tally t;
  for (const auto& s : shards) t.merge(s);
  return t;
}

}  // namespace evenpath
