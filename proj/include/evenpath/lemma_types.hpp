#pragma once

#include <cstdint>
#include <stdexcept>

#include "graph.hpp"

namespace evenpath {

/// Which sufficient condition is targeted. `a`: weaker condition, A-path of
/// order 2k or 2k+1. `b`: stronger condition, A-path of order exactly 2k+1.
enum class lemma_variant { a, b };

inline const char* to_string(lemma_variant v) { return v == lemma_variant::a ? "A" : "B"; }

/// Disjoint cover (A, B) of a graph's vertex set.
struct partition {
  vertex_set a;
  vertex_set b;

  static partition from_a(const graph& g, vertex_set a) { return {a, g.vertices() - a}; }
  bool operator==(const partition&) const = default;
};

inline void validate_partition(const graph& g, const partition& part) {
  if (part.a.intersects(part.b)) throw std::invalid_argument("partition sides overlap");
  if ((part.a | part.b) != g.vertices()) throw std::invalid_argument("partition does not cover the vertex set");
}

struct lemma_input {
  graph g;
  partition part;
  int k = 1;
  lemma_variant variant = lemma_variant::b;
};

/// Right-hand side (2k-2)|A| + k|B| or (2k-1)|A| + k|B|.
inline std::int64_t condition_rhs(int k, lemma_variant v, int size_a, int size_b) {
  const std::int64_t coeff = 2 * static_cast<std::int64_t>(k) - (v == lemma_variant::a ? 2 : 1);
  return coeff * size_a + static_cast<std::int64_t>(k) * size_b;
}

/// Required certificate orders: {2k, 2k+1} for variant a, {2k+1} for b.
inline bool order_matches(int order, int k, lemma_variant v) {
  return order == 2 * k + 1 || (v == lemma_variant::a && order == 2 * k);
}

}  // namespace evenpath
