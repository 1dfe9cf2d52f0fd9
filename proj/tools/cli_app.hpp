#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evenpath/evenpath.hpp"
#include "evenpath/json_io.hpp"

namespace evenpath::cli {

enum exit_code : int {
  ok = 0,
  internal_failure = 1,
  condition_not_met = 2,
  bound_failed = 3,
  parse_failure = 64,
  over_limit = 65,
};

enum class output_format { json, csv, plain };

struct run_config {
  std::string graph6;
  std::string file;
  std::string construct;
  int k = 1;
  int p = 2;
  std::string variant = "B";
  std::string a_list;
  double tol = 1e-9;
  std::uint64_t seed = default_seed;
  int threads = default_threads();
  output_format output = output_format::json;
  bool trace = false;
  bool with_erdos_gallai = false;
  int n = 4;
  int n_min = 1;
  int n_max = 6;
  int k_max = 2;
  std::uint64_t samples = 1000;
  std::string kind = "lemma";
};

/// Bad user input that is not a graph6 decoding problem.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<graph> load_graphs(const run_config& c) {
  const int sources = !c.graph6.empty() + !c.file.empty() + !c.construct.empty();
  if (sources != 1) throw usage_error("give exactly one of --graph6, --file, --construct");
  if (!c.graph6.empty()) return {from_graph6(c.graph6)};
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw usage_error("cannot open " + c.file);
    return read_graph6_stream(in);
  }
  int k = 0, n = 0;
  char comma = 0;
  std::istringstream is(c.construct.rfind("join:", 0) == 0 ? c.construct.substr(5) : std::string{});
  if (!(is >> k >> comma >> n) || comma != ',' || !is.eof())
    throw usage_error("--construct expects join:k,n, got '" + c.construct + "'");
  return {join_construction(k, n)};
}

inline vertex_set parse_a_list(const std::string& text, const graph& g) {
  if (text.empty()) return g.vertices();
  vertex_set a;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= g.order())
      throw usage_error("--A: '" + item + "' is not a vertex of a graph with " + std::to_string(g.order()) + " vertices");
    a.insert(v);
  }
  return a;
}

inline lemma_variant parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return lemma_variant::a;
  if (s == "B" || s == "b") return lemma_variant::b;
  throw usage_error("--variant must be A or B");
}

inline std::string join_list(const std::vector<vertex>& vs, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(vs[i]);
  return out;
}

inline std::string quantity_text(const quantity& q) { return to_json(q).dump(); }

inline int cmd_certify(const run_config& c, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(c);
  if (graphs.size() != 1) throw usage_error("certify needs exactly one graph, got " + std::to_string(graphs.size()));
  if (c.k < 1) throw usage_error("--k must be >= 1");
  const graph& g = graphs.front();
  const lemma_input in{g, partition::from_a(g, parse_a_list(c.a_list, g)), c.k, parse_variant(c.variant)};

  const condition_result cond = condition_holds(in);
  if (!cond.holds) {
    err << "condition not met: margin " << cond.margin << " (lhs " << cond.lhs << ", rhs " << cond.rhs << ")\n";
    if (c.output == output_format::json)
      out << json{{"error", "condition-not-met"}, {"margin", cond.margin}, {"lhs", cond.lhs}, {"rhs", cond.rhs}}.dump()
          << '\n';
    else if (c.output == output_format::csv)
      out << "error,margin,lhs,rhs\ncondition-not-met," << cond.margin << ',' << cond.lhs << ',' << cond.rhs << '\n';
    else
      out << "condition not met, margin " << cond.margin << '\n';
    return condition_not_met;
  }

  const lemma_result r = find_certified_a_path(in, lemma_options{c.trace});
  if (!verify_certificate(g, in.part.a, r.path, in.k, in.variant))
    throw contract_error("certificate failed verification", describe(r.trace));

  switch (c.output) {
    case output_format::json:
      out << certify_json(in, r).dump() << '\n';
      if (c.trace)
        for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
          json line{{"step", i}};
          line.update(to_json(r.trace.steps[i]));
          out << line.dump() << '\n';
        }
      break;
    case output_format::csv:
      out << "graph6,k,variant,margin,order,path\n"
          << to_graph6(g) << ',' << c.k << ',' << to_string(in.variant) << ',' << cond.margin << ','
          << r.path.order() << ',' << join_list(r.path.vertices) << '\n';
      break;
    case output_format::plain:
      out << "path " << join_list(r.path.vertices) << " (order " << r.path.order() << ")\n";
      if (c.trace) out << describe(r.trace);
      break;
  }
  return ok;
}

inline int cmd_check(const run_config& c, std::ostream& out, std::ostream&) {
  const auto graphs = load_graphs(c);
  if (c.k < 1) throw usage_error("--k must be >= 1");
  if (c.p < 2) throw usage_error("--p must be >= 2 for corollary1");
  bool failed = false;
  if (c.output == output_format::csv) out << "graph6,bound,k,p,applicable,lhs,rhs,holds\n";
  for (const graph& g : graphs) {
    if (g.order() < 1) throw usage_error("check needs at least one vertex");
    std::vector<bound_report> reports{theorem1_check(g, c.k), corollary1_check(g, c.k, c.p), edge_bound_check(g, c.k),
                                      spectral_check(g, c.k, c.tol)};
    if (c.with_erdos_gallai) reports.push_back(erdos_gallai_check(g, c.k));
    for (const auto& r : reports) failed |= r.applicable && !r.holds;

    switch (c.output) {
      case output_format::json: {
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        out << json{{"graph6", to_graph6(g)}, {"reports", list}}.dump() << '\n';
        break;
      }
      case output_format::csv:
        for (const auto& r : reports)
          out << to_graph6(g) << ',' << to_string(r.name) << ',' << r.k << ',' << r.p << ',' << r.applicable << ','
              << quantity_text(r.lhs) << ',' << quantity_text(r.rhs) << ',' << r.holds << '\n';
        break;
      case output_format::plain:
        for (const auto& r : reports) {
          out << to_string(r.name) << ": ";
          if (!r.applicable && r.name != bound_name::erdos_gallai)
            out << "not applicable, contains C" << r.forbidden->order() << " (" << join_list(r.forbidden->vertices) << ")";
          else if (!r.applicable)
            out << "not applicable";
          else
            out << (r.holds ? "holds" : "FAILS") << ", " << quantity_text(r.lhs) << " vs " << quantity_text(r.rhs);
          out << '\n';
        }
        break;
    }
  }
  return failed ? bound_failed : ok;
}

inline int cmd_phi(const run_config& c, std::ostream& out, std::ostream&) {
  const phi_result r = phi_bruteforce(c.k, c.p, c.n, c.threads);
  switch (c.output) {
    case output_format::json: out << to_json(r).dump() << '\n'; break;
    case output_format::csv:
      out << "k,p,n,phi,extremal_count,scanned\n"
          << r.k << ',' << r.p << ',' << r.n << ',' << r.phi << ',' << r.extremal.size() << ',' << r.scanned << '\n';
      break;
    case output_format::plain:
      out << "phi(" << r.k << "," << r.p << "," << r.n << ") = " << r.phi << '\n';
      for (const auto& w : r.extremal) out << w << '\n';
      break;
  }
  return ok;
}

inline int cmd_trend(const run_config& c, std::ostream& out, std::ostream&) {
  const auto rows = conjecture_trend(c.k, c.p, c.n_min, c.n_max, c.threads);
  if (c.output == output_format::json) {
    json list = json::array();
    for (const auto& r : rows) list.push_back(to_json(r));
    out << json{{"k", c.k}, {"p", c.p}, {"rows", list}}.dump() << '\n';
  } else {
    const char sep = c.output == output_format::csv ? ',' : ' ';
    out << "n" << sep << "phi" << sep << "ratio" << sep << "lower_ratio\n";
    for (const auto& r : rows) out << r.n << sep << r.phi << sep << r.ratio << sep << r.lower_ratio << '\n';
  }
  return ok;
}

inline int cmd_sharpness(const run_config& c, std::ostream& out, std::ostream&) {
  const auto found = sharpness_witness_search(c.k, parse_variant(c.variant), c.n_max, c.threads);
  if (c.output == output_format::json) {
    json list = json::array();
    for (const auto& w : found) list.push_back(to_json(w));
    out << json{{"k", c.k}, {"variant", c.variant}, {"n_max", c.n_max}, {"witnesses", list}}.dump() << '\n';
  } else {
    const char sep = c.output == output_format::csv ? ',' : ' ';
    if (c.output == output_format::csv) out << "graph6,A\n";
    for (const auto& w : found) out << w.graph6 << sep << join_list(w.a, ';') << '\n';
  }
  return ok;
}

inline int cmd_sweep(const run_config& c, std::ostream& out, std::ostream&) {
  json report;
  bool clean = false;
  if (c.kind == "lemma") {
    const auto r = lemma_sweep(c.n_max, c.k_max, c.samples, c.seed, c.threads);
    report = to_json(r);
    clean = r.ok();
  } else if (c.kind == "fuzz") {
    const auto t = certificate_fuzz(c.n, c.samples, c.seed, c.k_max, c.threads);
    report = json{{"n", c.n}, {"k_max", c.k_max}, {"seed", c.seed}, {"samples", c.samples}};
    report.update(to_json(t));
    clean = t.failure_count == 0;
  } else if (c.kind == "bounds") {
    bounds_sweep_options opt;
    opt.spectral = true;
    opt.tol = c.tol;
    const auto t = bounds_sweep(c.n, c.k, opt, c.threads);
    report = json{{"n", c.n}, {"k", c.k}};
    report.update(to_json(t));
    clean = t.violations() == 0;
  } else if (c.kind == "erdos-gallai") {
    const auto t = erdos_gallai_sweep(c.n, c.k, c.threads);
    report = json{{"n", c.n}, {"k", c.k}};
    report.update(to_json(t));
    clean = t.verified == t.applicable;
  } else {
    throw usage_error("--kind must be lemma, fuzz, bounds or erdos-gallai");
  }
  report["ok"] = clean;
  if (c.output == output_format::json)
    out << report.dump() << '\n';
  else
    out << report.dump(2) << '\n';
  return clean ? ok : internal_failure;
}

/// Parses argv and runs one command. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified even-path finder and degree-power bound checker for C_{2k+2}-free graphs"};
  app.require_subcommand(1);
  run_config c;

  const std::map<std::string, output_format> formats{
      {"json", output_format::json}, {"csv", output_format::csv}, {"plain", output_format::plain}};
  auto graph_flags = [&](CLI::App* s) {
    s->add_option("--graph6", c.graph6, "Graph in graph6 format");
    s->add_option("--file", c.file, "File with one graph6 string per line");
    s->add_option("--construct", c.construct, "Built-in construction, join:k,n");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--output", c.output, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    s->add_option("--threads", c.threads, "Worker threads (default from EVENPATH_THREADS)")->check(CLI::PositiveNumber);
  };

  auto* certify = app.add_subcommand("certify", "Run the certified A-path finder on one graph");
  graph_flags(certify);
  common(certify);
  certify->add_option("--k", c.k, "Half the target path order")->required();
  certify->add_option("--variant", c.variant, "A or B")->capture_default_str();
  certify->add_option("--A", c.a_list, "Comma-separated vertices of A (default: all)");
  certify->add_flag("--trace", c.trace, "Emit the finder's steps after the result");

  auto* check = app.add_subcommand("check", "Evaluate the bounds on given graphs");
  graph_flags(check);
  common(check);
  check->add_option("--k", c.k)->capture_default_str();
  check->add_option("--p", c.p, "Degree power for corollary1")->capture_default_str();
  check->add_option("--tol", c.tol, "Eigenvalue tolerance")->capture_default_str();
  check->add_flag("--with-erdos-gallai", c.with_erdos_gallai, "Also run the Erdos-Gallai reduction");

  auto* phi = app.add_subcommand("phi", "Exhaustive max of sum d^p over C_{2k+2}-free graphs");
  common(phi);
  phi->add_option("--k", c.k)->capture_default_str();
  phi->add_option("--p", c.p)->capture_default_str();
  phi->add_option("--n", c.n)->capture_default_str();

  auto* trend = app.add_subcommand("trend", "phi / (k n^p) over a range of n");
  common(trend);
  trend->add_option("--k", c.k)->capture_default_str();
  trend->add_option("--p", c.p)->capture_default_str();
  trend->add_option("--n-min", c.n_min)->capture_default_str();
  trend->add_option("--n-max", c.n_max)->capture_default_str();

  auto* sharp = app.add_subcommand("sharpness", "Equality inputs with no A-path of the target order");
  common(sharp);
  sharp->add_option("--k", c.k)->capture_default_str();
  sharp->add_option("--variant", c.variant)->capture_default_str();
  sharp->add_option("--n-max", c.n_max)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Batch validation (lemma, fuzz, bounds, erdos-gallai)");
  common(sweep);
  sweep->add_option("--kind", c.kind)->capture_default_str();
  sweep->add_option("--n", c.n, "Order for fuzz, bounds and erdos-gallai")->capture_default_str();
  sweep->add_option("--n-max", c.n_max, "Largest order for the lemma sweep")->capture_default_str();
  sweep->add_option("--k", c.k)->capture_default_str();
  sweep->add_option("--k-max", c.k_max)->capture_default_str();
  sweep->add_option("--samples", c.samples, "Random samples per order")->capture_default_str();
  sweep->add_option("--seed", c.seed)->capture_default_str();
  sweep->add_option("--tol", c.tol)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return parse_failure;
  }

  try {
    if (*certify) return cmd_certify(c, out, err);
    if (*check) return cmd_check(c, out, err);
    if (*phi) return cmd_phi(c, out, err);
    if (*trend) return cmd_trend(c, out, err);
    if (*sharp) return cmd_sharpness(c, out, err);
    return cmd_sweep(c, out, err);
  } catch (const parse_error& e) {
    err << "graph6 parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const limit_error& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return over_limit;
  } catch (const precondition_error& e) {
    err << "condition not met: margin " << e.margin() << '\n';
    return condition_not_met;
  } catch (const contract_error& e) {
    err << "internal contract failure: " << e.what() << '\n' << e.dump() << '\n';
    return internal_failure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return parse_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal_failure;
  }
}

}  // namespace evenpath::cli
