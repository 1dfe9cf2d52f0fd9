#pragma once

// Standalone certificate checker. Deliberately self-contained: it relies only
// on graph::adjacent and vertex_set::contains, never on the finder or on the
// path helpers the finder uses internally.

#include <vector>

#include "certificate.hpp"
#include "graph.hpp"
#include "lemma_types.hpp"

namespace evenpath {

inline bool verify_certificate(const graph& g, vertex_set a, const path_certificate& path, int k,
                               lemma_variant variant) {
  const auto& vs = path.vertices;
  const long order = static_cast<long>(vs.size());
  if (k < 1) return false;
  if (variant == lemma_variant::b && order != 2L * k + 1) return false;
  if (variant == lemma_variant::a && order != 2L * k && order != 2L * k + 1) return false;

  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (long i = 0; i < order; ++i) {
    const vertex v = vs[static_cast<std::size_t>(i)];
    if (v < 0 || v >= g.order()) return false;
    if (used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = true;
  }
  for (long i = 0; i + 1 < order; ++i)
    if (!g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i + 1)])) return false;
  return a.contains(vs.front()) && a.contains(vs.back());
}

}  // namespace evenpath
