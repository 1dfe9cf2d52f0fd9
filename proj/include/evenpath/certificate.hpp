#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"

namespace evenpath {

/// Ordered vertex list (v_1, ..., v_p) witnessing a path of order p.
struct path_certificate {
  std::vector<vertex> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  vertex front() const { return vertices.front(); }
  vertex back() const { return vertices.back(); }
  bool operator==(const path_certificate&) const = default;
  auto operator<=>(const path_certificate&) const = default;
};

/// Cyclically ordered vertex list; the closing edge v_p v_1 is implied.
struct cycle_certificate {
  std::vector<vertex> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  bool operator==(const cycle_certificate&) const = default;
};

inline bool is_path(const graph& g, const path_certificate& p) {
  if (p.vertices.empty()) return false;
  vertex_set seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const vertex v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

inline bool is_cycle(const graph& g, const cycle_certificate& c) {
  if (c.order() < 3) return false;
  if (!is_path(g, path_certificate{c.vertices})) return false;
  return g.adjacent(c.vertices.back(), c.vertices.front());
}

/// Path with both ends in `a`.
inline bool is_a_path(const graph& g, vertex_set a, const path_certificate& p) {
  return is_path(g, p) && a.contains(p.front()) && a.contains(p.back());
}

inline path_certificate reversed(path_certificate p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace evenpath
