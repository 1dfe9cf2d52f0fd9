#pragma once

// Certificate-producing finder for A-paths under the degree conditions
//
//   2 e(A) + e(A,B) > (2k-2)|A| + k|B|   -> A-path of order 2k or 2k+1   (variant a)
//   2 e(A) + e(A,B) > (2k-1)|A| + k|B|   -> A-path of order exactly 2k+1 (variant b)
//
// The finder is an induction on |G| unrolled into a loop over frames. Each
// frame is an induced subgraph of the input with B independent; a frame is
// either shrunk (component selection or deletion of a low-degree vertex,
// both of which keep the margin >= 1) or finished via a Hamiltonian cycle or
// a maximum path. Every move is recorded in a trace, in original labels.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "lemma_types.hpp"
#include "search.hpp"

namespace evenpath {

struct condition_result {
  bool holds = false;
  std::int64_t margin = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

inline condition_result condition_holds(const graph& g, const partition& part, int k, lemma_variant variant) {
  validate_partition(g, part);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  condition_result r;
  r.lhs = 2 * static_cast<std::int64_t>(edges_within(g, part.a)) + edges_between(g, part.a, part.b);
  r.rhs = condition_rhs(k, variant, part.a.size(), part.b.size());
  r.margin = r.lhs - r.rhs;
  r.holds = r.margin > 0;
  return r;
}

inline condition_result condition_holds(const lemma_input& in) {
  return condition_holds(in.g, in.part, in.k, in.variant);
}

/// G with every edge inside B removed. e(A) and e(A,B) are unchanged.
inline graph drop_b_edges(const graph& g, const partition& part) {
  validate_partition(g, part);
  graph out = g;
  for (vertex u : part.b)
    for (vertex v : g.neighbors(u) & part.b)
      if (u < v) out.remove_edge(u, v);
  return out;
}

enum class step_kind {
  vertex_deleted,
  b_edge_deleted,
  component_selected,
  max_path_found,
  rotation_applied,
  cycle_to_path,
  path_shortened,
  done,
};

inline const char* to_string(step_kind k) {
  switch (k) {
    case step_kind::vertex_deleted: return "vertex-deleted";
    case step_kind::b_edge_deleted: return "B-edge-deleted";
    case step_kind::component_selected: return "component-selected";
    case step_kind::max_path_found: return "max-path-found";
    case step_kind::rotation_applied: return "rotation-applied";
    case step_kind::cycle_to_path: return "cycle-to-path";
    case step_kind::path_shortened: return "path-shortened";
    case step_kind::done: return "done";
  }
  return "?";
}

/// One move of the finder. Vertices are in the input graph's labels; `frame`
/// is the vertex set of the graph the move was made in.
struct trace_step {
  step_kind kind{};
  vertex_set frame;
  std::int64_t margin = 0;
  std::vector<vertex> subject;  // deleted vertex, dropped edge, or kept component
  std::optional<path_certificate> path;
  std::optional<cycle_certificate> cycle;
  std::string note;
};

struct lemma_trace {
  std::vector<trace_step> steps;
};

inline std::string describe(const lemma_trace& t) {
  std::ostringstream os;
  auto list = [&os](const std::vector<vertex>& vs) {
    os << '(';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << ')';
  };
  for (const auto& s : t.steps) {
    os << to_string(s.kind) << " |G|=" << s.frame.size() << " margin=" << s.margin;
    if (!s.subject.empty()) {
      os << " subject=";
      list(s.subject);
    }
    if (s.path) {
      os << " path=";
      list(s.path->vertices);
    }
    if (s.cycle) {
      os << " cycle=";
      list(s.cycle->vertices);
    }
    if (!s.note.empty()) os << " [" << s.note << ']';
    os << '\n';
  }
  return os.str();
}

struct lemma_result {
  path_certificate path;
  lemma_trace trace;
};

struct lemma_options {
  bool record_trace = true;
};

namespace detail {

inline void require_b_independent(const graph& g, vertex_set a, const char* op) {
  const vertex_set b = g.vertices() - a;
  for (vertex u : b)
    if (g.neighbors(u).intersects(b)) throw contract_error(std::string(op) + ": B is not independent");
}

inline path_certificate slice(const path_certificate& p, std::size_t first, std::size_t last) {
  return path_certificate{std::vector<vertex>(p.vertices.begin() + static_cast<std::ptrdiff_t>(first),
                                              p.vertices.begin() + static_cast<std::ptrdiff_t>(last))};
}

inline path_certificate shorten_unchecked(vertex_set a, const path_certificate& path) {
  const std::size_t p = path.vertices.size();
  if (!a.contains(path.vertices[1])) return slice(path, 2, p);
  if (!a.contains(path.vertices[p - 2])) return slice(path, 0, p - 2);
  return slice(path, 1, p - 1);
}

struct no_sink {
  void operator()(const path_certificate&) const {}
};

template <class Sink = no_sink>
path_certificate normalize(const graph& g, vertex_set a, path_certificate path, int k, lemma_variant variant,
                           Sink&& on_shorten = {}) {
  const int target = 2 * k + 1;
  if (!is_a_path(g, a, path)) throw contract_error("normalize_to_target: input is not an A-path");
  if (variant == lemma_variant::a && path.order() < 2 * k)
    throw contract_error("normalize_to_target: A-path shorter than 2k");
  if (variant == lemma_variant::b && (path.order() < target || path.order() % 2 == 0))
    throw contract_error("normalize_to_target: need an A-path of odd order >= 2k+1");
  while (path.order() > target) {
    path = shorten_unchecked(a, path);
    if (!is_a_path(g, a, path)) throw contract_error("normalize_to_target: shortening broke the A-path");
    on_shorten(path);
  }
  return path;
}

/// Turns a long cycle into an A-path before normalisation.
inline path_certificate open_cycle(const graph& g, vertex_set a, const cycle_certificate& cyc, int k,
                                   lemma_variant variant) {
  if (!is_cycle(g, cyc)) throw contract_error("a_path_from_cycle: not a cycle of the graph");
  const int p = cyc.order();
  if (p < 2 * k + 1) throw contract_error("a_path_from_cycle: cycle shorter than 2k+1");
  require_b_independent(g, a, "a_path_from_cycle");
  const auto& c = cyc.vertices;
  auto around = [&](int start, int count) {
    path_certificate out;
    for (int i = 0; i < count; ++i) out.vertices.push_back(c[static_cast<std::size_t>((start + i) % p)]);
    return out;
  };

  if (variant == lemma_variant::b && p % 2 == 1) {
    // An odd cycle cannot alternate between A and the independent set B.
    for (int j = 0; j < p; ++j)
      if (a.contains(c[static_cast<std::size_t>(j)]) && a.contains(c[static_cast<std::size_t>((j + 1) % p)]))
        return around(j + 1, p);
    throw contract_error("a_path_from_cycle: odd cycle without two consecutive A-vertices");
  }
  for (int j = 0; j < p; ++j)
    if (!a.contains(c[static_cast<std::size_t>(j)])) return around(j + 1, p - 1);
  // Entirely inside A.
  return variant == lemma_variant::a ? around(0, p) : around(0, p - 1);
}

}  // namespace detail

/// A-path of order p > 2 -> A-path of order p - 2 (B must be independent).
inline path_certificate shorten_a_path(const graph& g, vertex_set a, const path_certificate& path) {
  if (path.order() <= 2) throw contract_error("shorten_a_path: order must exceed 2");
  if (!is_a_path(g, a, path)) throw contract_error("shorten_a_path: input is not an A-path");
  detail::require_b_independent(g, a, "shorten_a_path");
  path_certificate out = detail::shorten_unchecked(a, path);
  if (out.order() != path.order() - 2 || !is_a_path(g, a, out))
    throw contract_error("shorten_a_path: result is not an A-path of order p-2");
  return out;
}

/// Repeatedly shortens until the order is 2k or 2k+1 (variant a) or exactly 2k+1 (variant b).
inline path_certificate normalize_to_target(const graph& g, vertex_set a, const path_certificate& path, int k,
                                            lemma_variant variant) {
  detail::require_b_independent(g, a, "normalize_to_target");
  return detail::normalize(g, a, path, k, variant);
}

inline path_certificate a_path_from_cycle(const graph& g, vertex_set a, const cycle_certificate& cyc, int k,
                                          lemma_variant variant) {
  return detail::normalize(g, a, detail::open_cycle(g, a, cyc, k, variant), k, variant);
}

enum class rotation_kind { rotated, cycle, no_move };

struct rotation_result {
  rotation_kind kind = rotation_kind::no_move;
  path_certificate path;    // rotated: (v2..vi, v1, v(i+1)..vp)
  cycle_certificate cycle;  // cycle: (v1, v2, ..., v(ir)) closed by the edge v(ir) v1
  int pivot = 0;            // rotated: 1-based position i of the first vertex of the pair
};

/// For a maximum path: either reroute through two consecutive path-neighbours
/// of the head, or close the cycle through the head's last path-neighbour,
/// which has order >= 2 d(v1). A head of degree <= 1 yields `no_move`.
/// Among several consecutive pairs the one furthest along the path is used.
inline rotation_result endpoint_rotation(const graph& g, const path_certificate& path) {
  if (!is_path(g, path)) throw contract_error("endpoint_rotation: not a path of the graph");
  const auto& v = path.vertices;
  const std::size_t p = v.size();
  const vertex head = v[0];
  vertex_set on_path;
  for (vertex x : v) on_path.insert(x);
  if (!g.neighbors(head).is_subset_of(on_path))
    throw contract_error("endpoint_rotation: head has a neighbour off the path, so the path is not maximum");

  rotation_result r;
  for (std::size_t i = p - 1; i >= 2; --i) {
    if (g.adjacent(head, v[i - 1]) && g.adjacent(head, v[i])) {
      r.kind = rotation_kind::rotated;
      r.pivot = static_cast<int>(i);  // v[i-1] is the 1-based i-th vertex
      r.path.vertices.assign(v.begin() + 1, v.begin() + static_cast<std::ptrdiff_t>(i));
      r.path.vertices.push_back(head);
      r.path.vertices.insert(r.path.vertices.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
      return r;
    }
  }
  const int degree = g.degree(head);
  if (degree < 2) {
    r.path = path;
    return r;
  }
  std::size_t last = 0;
  for (std::size_t i = 1; i < p; ++i)
    if (g.adjacent(head, v[i])) last = i;
  r.kind = rotation_kind::cycle;
  r.cycle.vertices.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  if (r.cycle.order() < 2 * degree) throw contract_error("endpoint_rotation: cycle shorter than 2 d(v1)");
  return r;
}

/// p >= d(v1) + d(vp) + 1, which holds for maximum paths of connected
/// non-Hamiltonian graphs.
inline bool max_path_endpoint_bound(const graph& g, const path_certificate& path) {
  return path.order() >= g.degree(path.front()) + g.degree(path.back()) + 1;
}

namespace detail {

class lemma_engine {
 public:
  lemma_engine(const lemma_input& in, const lemma_options& opt) : in_(in), opt_(opt) {}

  lemma_result run() {
    validate_partition(in_.g, in_.part);
    if (in_.k < 1) throw std::invalid_argument("k must be >= 1");
    const auto cond = condition_holds(in_);
    if (!cond.holds)
      throw precondition_error("condition fails: margin " + std::to_string(cond.margin) + " <= 0", cond.margin);

    graph g0 = in_.g;
    std::vector<vertex> identity(static_cast<std::size_t>(g0.order()));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<vertex>(i);
    cur_ = frame{g0, in_.part.a, identity};
    for (vertex u : in_.part.b)
      for (vertex v : in_.g.neighbors(u) & in_.part.b)
        if (u < v) {
          cur_.g.remove_edge(u, v);
          record(step_kind::b_edge_deleted, {u, v});
        }
    reduced_ = cur_.g;

    for (;;) {
      if (auto done = step()) return finish(std::move(*done));
    }
  }

 private:
  struct frame {
    graph g;
    vertex_set a;
    std::vector<vertex> original;
  };

  int k() const { return in_.k; }
  bool part_a() const { return in_.variant == lemma_variant::a; }
  vertex_set b() const { return cur_.g.vertices() - cur_.a; }

  std::int64_t margin_of(const graph& g, vertex_set a) const {
    std::int64_t lhs = 0;
    for (vertex u : a) lhs += g.degree(u);
    return lhs - condition_rhs(k(), in_.variant, a.size(), g.order() - a.size());
  }
  std::int64_t margin() const { return margin_of(cur_.g, cur_.a); }

  vertex_set frame_set() const {
    vertex_set s;
    for (vertex v : cur_.original) s.insert(v);
    return s;
  }
  path_certificate lift(const path_certificate& p) const {
    path_certificate out;
    for (vertex v : p.vertices) out.vertices.push_back(cur_.original[static_cast<std::size_t>(v)]);
    return out;
  }
  cycle_certificate lift(const cycle_certificate& c) const {
    return cycle_certificate{lift(path_certificate{c.vertices}).vertices};
  }

  void record(step_kind kind, std::vector<vertex> subject = {}, std::optional<path_certificate> path = {},
              std::optional<cycle_certificate> cycle = {}, std::string note = {}) {
    if (!opt_.record_trace) return;
    trace_step s{kind, frame_set(), margin(), std::move(subject), {}, {}, std::move(note)};
    if (path) s.path = lift(*path);
    if (cycle) s.cycle = lift(*cycle);
    trace_.steps.push_back(std::move(s));
  }

  [[noreturn]] void fail(const std::string& what) const { throw contract_error(what, describe(trace_)); }

  void replace_frame(vertex_set keep) {
    auto sub = induced_subgraph(cur_.g, keep);
    frame next{sub.g, {}, {}};
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
      const vertex old = sub.original[i];
      if (cur_.a.contains(old)) next.a.insert(static_cast<vertex>(i));
      next.original.push_back(cur_.original[static_cast<std::size_t>(old)]);
    }
    cur_ = std::move(next);
  }

  void delete_vertex(vertex u, std::int64_t expected_margin, const char* note) {
    const vertex orig = cur_.original[static_cast<std::size_t>(u)];
    replace_frame(cur_.g.vertices() - vertex_set::single(u));
    if (margin() != expected_margin)
      fail("margin after deleting vertex " + std::to_string(orig) + " is " + std::to_string(margin()) +
           ", expected " + std::to_string(expected_margin));
    record(step_kind::vertex_deleted, {orig}, {}, {}, note);
  }

  path_certificate normalize_recorded(const path_certificate& p) {
    return normalize(cur_.g, cur_.a, p, k(), in_.variant,
                     [this](const path_certificate& q) { record(step_kind::path_shortened, {}, q); });
  }

  path_certificate from_cycle(const cycle_certificate& c, const char* note) {
    path_certificate opened = open_cycle(cur_.g, cur_.a, c, k(), in_.variant);
    record(step_kind::cycle_to_path, {}, opened, c, note);
    return normalize_recorded(opened);
  }

  // One induction step: nullopt when the frame shrank, else the local certificate.
  std::optional<path_certificate> step() {
    const int n = cur_.g.order();
    const std::int64_t m = margin();
    if (m < 1) fail("margin dropped to " + std::to_string(m));

    // Size floor: the condition is unsatisfiable below it.
    const int floor = part_a() ? 2 * k() - 1 : 2 * k();
    if (n <= floor) {
      const std::int64_t sa = cur_.a.size();
      std::ostringstream os;
      os << "condition holds on a graph of order " << n << " <= " << floor << ": |G|(|A|-k) = "
         << n * (sa - k()) << ", " << (part_a() ? "(k-1)|A| = " : "k|A| = ")
         << (part_a() ? (k() - 1) * sa : k() * sa) << ", margin " << m;
      fail(os.str());
    }

    const auto comps = components(cur_.g);
    if (comps.size() > 1) {
      for (vertex_set c : comps) {
        const vertex_set ca = cur_.a & c;
        std::int64_t lhs = 0;
        for (vertex u : ca) lhs += cur_.g.degree(u);
        if (lhs - condition_rhs(k(), in_.variant, ca.size(), c.size() - ca.size()) >= 1) {
          std::vector<vertex> kept;
          for (vertex v : c) kept.push_back(cur_.original[static_cast<std::size_t>(v)]);
          replace_frame(c);
          record(step_kind::component_selected, std::move(kept));
          return std::nullopt;
        }
      }
      fail("no component satisfies the condition although it is additive over components");
    }

    // Connected from here on.
    std::optional<cycle_certificate> ham;
    if (n == 2) {
      ham = cycle_certificate{{0, 1}};  // K2: closed walk, handled like a Hamiltonian cycle
    } else {
      ham = hamiltonian_cycle(cur_.g);
    }
    if (ham) {
      if (part_a() && n == 2 * k()) {
        const auto& c = ham->vertices;
        for (int j = 0; j < n; ++j) {
          if (cur_.a.contains(c[static_cast<std::size_t>(j)]) &&
              cur_.a.contains(c[static_cast<std::size_t>((j + 1) % n)])) {
            path_certificate opened;
            for (int i = 1; i <= n; ++i) opened.vertices.push_back(c[static_cast<std::size_t>((j + i) % n)]);
            record(step_kind::cycle_to_path, {}, opened, std::nullopt, "hamiltonian, order 2k");
            return opened;
          }
        }
        std::ostringstream os;
        os << "Hamiltonian frame of order 2k alternates between A and B: |A| = " << cur_.a.size()
           << ", |B| = " << b().size() << ", 2e(A)+e(A,B) <= k(2k-1) = " << k() * (2 * k() - 1)
           << " = right-hand side, contradicting margin " << m;
        fail(os.str());
      }
      return from_cycle(*ham, "hamiltonian");
    }

    // Low-degree vertices of B.
    for (vertex u : b()) {
      const int d = cur_.g.degree(u);
      if (d <= k()) {
        delete_vertex(u, m - d + k(), "B-vertex of degree <= k");
        return std::nullopt;
      }
    }
    // Low-weight vertices of A: 2 d_A(u) + d_B(u) at most the threshold.
    const int threshold = part_a() ? 2 * k() - 2 : 2 * k() - 1;
    for (vertex u : cur_.a) {
      const int weight = 2 * (cur_.g.neighbors(u) & cur_.a).size() + (cur_.g.neighbors(u) & b()).size();
      if (weight <= threshold) {
        delete_vertex(u, m - weight + threshold, "A-vertex of low weight");
        return std::nullopt;
      }
    }

    path_certificate p = longest_path(cur_.g);
    if (!max_path_endpoint_bound(cur_.g, p))
      fail("maximum path violates p >= d(v1) + d(vp) + 1 in a connected non-Hamiltonian frame");
    if (cur_.a.contains(p.front()) && !cur_.a.contains(p.back())) p = reversed(std::move(p));
    record(step_kind::max_path_found, {}, p);
    return part_a() ? finish_part_a(p) : finish_part_b(p);
  }

  void require_order(const path_certificate& q, int at_least, const char* where) const {
    if (q.order() < at_least)
      fail(std::string(where) + ": order " + std::to_string(q.order()) + " below " + std::to_string(at_least));
  }

  path_certificate finish_part_a(const path_certificate& p) {
    const std::size_t len = p.vertices.size();
    const bool head_b = !cur_.a.contains(p.front());
    const bool tail_b = !cur_.a.contains(p.back());
    path_certificate q = head_b && tail_b ? slice(p, 1, len - 1) : head_b ? slice(p, 1, len) : p;
    require_order(q, 2 * k() + 1, "maximum-path A-path");
    return normalize_recorded(q);
  }

  rotation_result rotate(const path_certificate& p) {
    rotation_result r = endpoint_rotation(cur_.g, p);
    if (r.kind == rotation_kind::no_move) fail("rotation found no move although d(v1) >= k+1 >= 2");
    if (r.kind == rotation_kind::rotated)
      record(step_kind::rotation_applied, {}, r.path, std::nullopt, "pivot " + std::to_string(r.pivot));
    else
      record(step_kind::rotation_applied, {}, std::nullopt, r.cycle, "long cycle at head");
    return r;
  }

  path_certificate finish_part_b(const path_certificate& p) {
    const std::size_t len = p.vertices.size();
    const int order = p.order();
    const bool head_b = !cur_.a.contains(p.front());
    const bool tail_b = !cur_.a.contains(p.back());

    if (head_b && tail_b) {
      require_order(p, 2 * k() + 3, "maximum path with both ends in B");
      if (order % 2 == 1) return normalize_recorded(slice(p, 1, len - 1));
      rotation_result r = rotate(p);
      if (r.kind == rotation_kind::cycle) return from_cycle(r.cycle, "rotation cycle");
      return normalize_recorded(slice(r.path, 0, len - 1));
    }
    if (head_b) {
      require_order(p, 2 * k() + 2, "maximum path with one end in B");
      if (order % 2 == 0) return normalize_recorded(slice(p, 1, len));
      rotation_result r = rotate(p);
      if (r.kind == rotation_kind::cycle) return from_cycle(r.cycle, "rotation cycle");
      return normalize_recorded(r.path);
    }
    require_order(p, 2 * k() + 1, "maximum path with both ends in A");
    if (order % 2 == 1) return normalize_recorded(p);
    if (cur_.a.contains(p.vertices[1])) return normalize_recorded(slice(p, 1, len));
    rotation_result r = rotate(p);
    if (r.kind == rotation_kind::cycle) return from_cycle(r.cycle, "rotation cycle");
    return normalize_recorded(slice(r.path, 1, len));
  }

  lemma_result finish(path_certificate local) {
    record(step_kind::done, {}, local);
    path_certificate lifted = lift(local);
    if (!is_a_path(reduced_, in_.part.a, lifted) || !order_matches(lifted.order(), k(), in_.variant))
      fail("final certificate does not validate in the input graph");
    return {std::move(lifted), std::move(trace_)};
  }

  const lemma_input& in_;
  lemma_options opt_;
  frame cur_;
  graph reduced_;
  lemma_trace trace_;
};

}  // namespace detail

/// Runs the constructive proof. Throws precondition_error when the condition
/// fails and contract_error (with a trace dump) if any internal step misbehaves.
inline lemma_result find_certified_a_path(const lemma_input& in, const lemma_options& opt = {}) {
  return detail::lemma_engine(in, opt).run();
}

}  // namespace evenpath
