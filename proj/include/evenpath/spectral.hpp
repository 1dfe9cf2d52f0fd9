#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace evenpath {

struct spectral_options {
  int max_iterations = 100000;
};

namespace detail {

// Power iteration on A + I restricted to one connected component. For a
// positive vector x, min_i (Mx)_i / x_i <= rho(M) <= max_i (Mx)_i / x_i
// (Collatz-Wielandt) and the Rayleigh quotient is another lower bound, so
// the loop stops on a certified bracket rather than on a stall heuristic.
// The +I shift keeps bipartite components from oscillating.
inline double component_radius(const graph& g, vertex_set comp, double tol, const spectral_options& opt) {
  const std::vector<vertex> vs = comp.to_vector();
  const std::size_t n = vs.size();
  if (n == 1) return 0.0;

  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < n; ++i) local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (vertex w : g.neighbors(vs[i])) nbrs[i].push_back(local[static_cast<std::size_t>(w)]);

  std::vector<double> x(n, 1.0), y(n);
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opt.max_iterations; ++it) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, xy = 0.0, xx = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (int j : nbrs[i]) s += x[static_cast<std::size_t>(j)];
      y[i] = s;
      const double ratio = s / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      xy += x[i] * s;
      xx += x[i] * x[i];
      norm = std::max(norm, s);
    }
    lower = std::max(lo, xy / xx);
    upper = hi;
    if (upper - lower < tol) return 0.5 * (lower + upper) - 1.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw numeric_error("power iteration did not converge; bracket width " + std::to_string(upper - lower),
                      upper - lower);
}

}  // namespace detail

/// Largest adjacency eigenvalue, within absolute error `tol`. Computed per
/// connected component (the spectrum is the union of the components' spectra).
inline double spectral_radius(const graph& g, double tol, const spectral_options& opt = {}) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius needs at least one vertex");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double mu = 0.0;
  for (vertex_set c : components(g)) mu = std::max(mu, detail::component_radius(g, c, tol, opt));
  return mu;
}

}  // namespace evenpath
