#pragma once

// Checkers for the degree-power inequalities on C_{2k+2}-free graphs. All
// integer verdicts are exact: radicals are compared by squaring in 128-bit
// arithmetic. Only the spectral check touches floating point.

#include <cmath>
#include <cstdint>
#include <optional>
#include <variant>

#include "certificate.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "lemma.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "verify.hpp"

namespace evenpath {

enum class bound_name { theorem1, corollary1, edge_bound, erdos_gallai, spectral };

inline const char* to_string(bound_name b) {
  switch (b) {
    case bound_name::theorem1: return "theorem1";
    case bound_name::corollary1: return "corollary1";
    case bound_name::edge_bound: return "edge-bound";
    case bound_name::erdos_gallai: return "erdos-gallai";
    case bound_name::spectral: return "spectral";
  }
  return "?";
}

/// Exact integer, or a float where the quantity is irrational / numerical.
using quantity = std::variant<std::int64_t, double>;

struct bound_report {
  bound_name name{};
  int k = 0;
  int p = 0;  // degree power, corollary1 only
  bool applicable = false;
  quantity lhs = std::int64_t{0};
  quantity rhs = std::int64_t{0};
  bool holds = false;
  std::optional<cycle_certificate> forbidden;  // C_{2k+2} when not applicable
  std::optional<path_certificate> path;        // erdos-gallai witness
};

namespace bounds {

using i128 = __int128;

inline void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

/// Sum d^2 and 2km + k(n-1)n.
inline std::pair<std::int64_t, std::int64_t> theorem1_sides(const graph& g, int k) {
  const std::int64_t n = g.order(), m = g.edge_count();
  const auto lhs = static_cast<std::int64_t>(degree_power_sum(g, 2));
  const std::int64_t rhs = checked::add(checked::mul<std::int64_t>(2 * k, m), checked::mul<std::int64_t>(k, (n - 1) * n));
  return {lhs, rhs};
}

/// First vertex u violating sum_{v in N(u)} d(v) <= k d(u) + k(n-1), if any.
inline std::optional<vertex> theorem1_vertex_violation(const graph& g, int k) {
  const int n = g.order();
  for (vertex u = 0; u < n; ++u) {
    std::int64_t s = 0;
    for (vertex v : g.neighbors(u)) s += g.degree(v);
    if (s > static_cast<std::int64_t>(k) * g.degree(u) + static_cast<std::int64_t>(k) * (n - 1)) return u;
  }
  return std::nullopt;
}

/// lhs <= k n^p + 2 (kn)^{3/2} n^{p-2}, decided exactly by squaring.
inline bool corollary1_holds(std::uint64_t lhs, int n, int k, int p) {
  const i128 main = checked::mul<i128>(k, checked::pow<i128>(n, p));
  const i128 excess = checked::sub<i128>(static_cast<i128>(lhs), main);
  if (excess <= 0) return true;
  // excess^2 <= 4 k^3 n^{2p-1}
  const i128 bound = checked::mul<i128>(4 * checked::pow<i128>(k, 3), checked::pow<i128>(n, 2 * p - 1));
  return checked::mul<i128>(excess, excess) <= bound;
}

inline double corollary1_rhs(int n, int k, int p) {
  const double nd = n, kd = k;
  return kd * std::pow(nd, p) + 2.0 * std::pow(kd * nd, 1.5) * std::pow(nd, p - 2);
}

/// m <= -kn + n sqrt(k(n-1) + k^2)  <=>  (m + kn)^2 <= n^2 (k(n-1) + k^2).
inline bool edge_bound_holds(std::int64_t m, int n, int k) {
  const i128 left = checked::add<i128>(m, static_cast<i128>(k) * n);
  const i128 right = checked::mul<i128>(static_cast<i128>(n) * n, static_cast<i128>(k) * (n - 1) + static_cast<i128>(k) * k);
  return left * left <= right;
}

/// 4m^2 / n <= 2km + k(n-1)n, the consequence of the sum-of-squares bound
/// that the closed form above is meant to solve. Its positive root is
/// m = (kn + n sqrt(k^2 + 4k(n-1))) / 4, which exceeds the closed form.
inline bool edge_quadratic_holds(std::int64_t m, int n, int k) {
  const i128 left = checked::mul<i128>(4 * static_cast<i128>(m), m);
  const i128 right = checked::mul<i128>(n, checked::add<i128>(checked::mul<i128>(2 * static_cast<i128>(k), m), static_cast<i128>(k) * (n - 1) * n));
  return left <= right;
}

inline double edge_quadratic_rhs(int n, int k) {
  const double kd = k, nd = n;
  return (kd * nd + nd * std::sqrt(kd * kd + 4.0 * kd * (nd - 1))) / 4.0;
}

inline double edge_bound_rhs(int n, int k) {
  return -static_cast<double>(k) * n + n * std::sqrt(static_cast<double>(k) * (n - 1) + static_cast<double>(k) * k);
}

/// mu^2 - k mu <= k(n-1) + 3 tol (mu + k); the slack absorbs the eigenvalue tolerance.
inline bool spectral_holds(double mu, int n, int k, double tol) {
  return mu * mu - k * mu <= static_cast<double>(k) * (n - 1) + 3.0 * tol * (mu + k);
}

/// Variant and k' under which the lemma with B empty yields a path of order k+2.
inline std::pair<lemma_variant, int> erdos_gallai_mapping(int k) {
  return k % 2 == 0 ? std::pair{lemma_variant::a, (k + 2) / 2} : std::pair{lemma_variant::b, (k + 1) / 2};
}

/// Path of order k+2 when 2m > kn, via the certified finder with B empty.
inline std::optional<path_certificate> erdos_gallai_path(const graph& g, int k) {
  require_k(k);
  if (2 * static_cast<std::int64_t>(g.edge_count()) <= static_cast<std::int64_t>(k) * g.order()) return std::nullopt;
  const auto [variant, kk] = erdos_gallai_mapping(k);
  lemma_input in{g, partition{g.vertices(), {}}, kk, variant};
  path_certificate p = find_certified_a_path(in, lemma_options{false}).path;
  // Variant a may return order k+3; with B empty any prefix is still a path.
  if (p.order() == k + 3) p.vertices.pop_back();
  return p;
}

}  // namespace bounds

inline bound_report theorem1_check(const graph& g, int k) {
  bounds::require_k(k);
  bound_report r{bound_name::theorem1, k};
  r.forbidden = find_cycle_exact(g, 2 * k + 2);
  r.applicable = !r.forbidden;
  const auto [lhs, rhs] = bounds::theorem1_sides(g, k);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs;
  return r;
}

inline bound_report corollary1_check(const graph& g, int k, int p) {
  bounds::require_k(k);
  if (p < 2) throw std::invalid_argument("corollary1 needs p >= 2");
  bound_report r{bound_name::corollary1, k, p};
  r.forbidden = find_cycle_exact(g, 2 * k + 2);
  r.applicable = !r.forbidden;
  const std::uint64_t lhs = degree_power_sum(g, p);
  r.lhs = static_cast<std::int64_t>(lhs);
  r.rhs = bounds::corollary1_rhs(g.order(), k, p);
  r.holds = bounds::corollary1_holds(lhs, g.order(), k, p);
  return r;
}

inline bound_report edge_bound_check(const graph& g, int k) {
  bounds::require_k(k);
  bound_report r{bound_name::edge_bound, k};
  r.forbidden = find_cycle_exact(g, 2 * k + 2);
  r.applicable = !r.forbidden;
  r.lhs = std::int64_t{g.edge_count()};
  r.rhs = bounds::edge_bound_rhs(g.order(), k);
  r.holds = bounds::edge_bound_holds(g.edge_count(), g.order(), k);
  return r;
}

inline bound_report erdos_gallai_check(const graph& g, int k) {
  bounds::require_k(k);
  bound_report r{bound_name::erdos_gallai, k};
  r.lhs = 2 * static_cast<std::int64_t>(g.edge_count());
  r.rhs = static_cast<std::int64_t>(k) * g.order();
  r.applicable = std::get<std::int64_t>(r.lhs) > std::get<std::int64_t>(r.rhs);
  if (!r.applicable) return r;
  r.path = bounds::erdos_gallai_path(g, k);
  r.holds = r.path && r.path->order() == k + 2 && is_path(g, *r.path);
  return r;
}

inline bound_report spectral_check(const graph& g, int k, double tol) {
  bounds::require_k(k);
  bound_report r{bound_name::spectral, k};
  r.forbidden = find_cycle_exact(g, 2 * k + 2);
  r.applicable = !r.forbidden;
  const double mu = spectral_radius(g, tol);
  r.lhs = mu * mu - k * mu;
  r.rhs = static_cast<double>(k) * (g.order() - 1);
  r.holds = bounds::spectral_holds(mu, g.order(), k, tol);
  return r;
}

}  // namespace evenpath
