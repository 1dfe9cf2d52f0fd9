#pragma once

// JSON views of results. Keys keep insertion order so output is byte-stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "bounds.hpp"
#include "extremal.hpp"
#include "graph6.hpp"
#include "lemma.hpp"
#include "sweep.hpp"

namespace evenpath {

using json = nlohmann::ordered_json;

inline json to_json(const quantity& q) {
  return std::visit([](auto v) { return json(v); }, q);
}

inline json to_json(const trace_step& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["frame"] = s.frame.to_vector();
  j["margin"] = s.margin;
  if (!s.subject.empty()) j["subject"] = s.subject;
  if (s.path) j["path"] = s.path->vertices;
  if (s.cycle) j["cycle"] = s.cycle->vertices;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

inline json to_json(const lemma_trace& t) {
  json j = json::array();
  for (const auto& s : t.steps) j.push_back(to_json(s));
  return j;
}

inline json certify_json(const lemma_input& in, const lemma_result& r) {
  json j;
  j["graph6"] = to_graph6(in.g);
  j["k"] = in.k;
  j["variant"] = to_string(in.variant);
  j["A"] = in.part.a.to_vector();
  j["margin"] = condition_holds(in).margin;
  j["path"] = r.path.vertices;
  j["order"] = r.path.order();
  j["steps"] = r.trace.steps.size();
  return j;
}

inline json to_json(const bound_report& r) {
  json j;
  j["bound"] = to_string(r.name);
  j["k"] = r.k;
  if (r.name == bound_name::corollary1) j["p"] = r.p;
  j["applicable"] = r.applicable;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["holds"] = r.holds;
  if (r.forbidden) j["forbidden_cycle"] = r.forbidden->vertices;
  if (r.path) j["path"] = r.path->vertices;
  return j;
}

inline json to_json(const phi_result& r) {
  json j;
  j["k"] = r.k;
  j["p"] = r.p;
  j["n"] = r.n;
  j["phi"] = r.phi;
  j["extremal"] = r.extremal;
  j["scanned"] = r.scanned;
  j["construction"] = r.construction ? json(*r.construction) : json(nullptr);
  j["lower_reference"] = r.lower_reference;
  return j;
}

inline json to_json(const trend_row& r) {
  return json{{"n", r.n}, {"phi", r.phi}, {"ratio", r.ratio}, {"lower_ratio", r.lower_ratio}};
}

inline json to_json(const sharpness_witness& w) { return json{{"graph6", w.graph6}, {"A", w.a}}; }

inline json to_json(const lemma_failure& f) {
  json j{{"graph6", f.graph6}, {"A", f.a}, {"k", f.k}, {"variant", to_string(f.variant)}, {"reason", f.reason}};
  if (!f.dump.empty()) j["dump"] = f.dump;
  return j;
}

inline json to_json(const lemma_tally& t) {
  json j;
  j["inputs"] = t.inputs;
  j["condition_held"] = t.condition_held;
  j["certified"] = t.certified;
  j["oracle_confirmed"] = t.oracle_confirmed;
  j["rejected"] = t.rejected;
  j["rejected_correctly"] = t.rejected_correctly;
  j["failure_count"] = t.failure_count;
  j["failures"] = json::array();
  for (const auto& f : t.failures) j["failures"].push_back(to_json(f));
  return j;
}

inline json to_json(const lemma_sweep_report& r) {
  json j;
  j["n_max"] = r.n_max;
  j["k_max"] = r.k_max;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["ok"] = r.ok();
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json x{{"n", row.n}, {"mode", row.exhaustive ? "exhaustive" : "random"}};
    x.update(to_json(row.tally));
    j["rows"].push_back(std::move(x));
  }
  j["total"] = to_json(r.total);
  return j;
}

inline json to_json(const bounds_tally& t) {
  json j;
  j["graphs"] = t.graphs;
  j["theorem1_violations"] = t.theorem1_violations;
  j["vertex_violations"] = t.vertex_violations;
  j["edge_bound_violations"] = t.edge_bound_violations;
  j["edge_quadratic_violations"] = t.edge_quadratic_violations;
  json c = json::object();
  for (auto [p, v] : t.corollary1_violations) c[std::to_string(p)] = v;
  j["corollary1_violations"] = c;
  j["spectral_checked"] = t.spectral_checked;
  j["spectral_violations"] = t.spectral_violations;
  j["spectral_unconverged"] = t.spectral_unconverged;
  j["examples"] = t.examples;
  return j;
}

inline json to_json(const erdos_gallai_tally& t) {
  return json{{"graphs", t.graphs}, {"applicable", t.applicable}, {"verified", t.verified}, {"failures", t.failures}};
}

}  // namespace evenpath
