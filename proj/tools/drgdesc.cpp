// drgdesc: command-line front end.
//
// Exit codes: 0 success, 1 a requested check failed, 2 invalid configuration
// or input, 3 size or search budget exceeded.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "drgdesc/errors.hpp"
#include "drgdesc/serialize.hpp"

namespace {

using namespace drg;

struct Options {
  std::string family;
  std::string params;
  std::string graph_json;
  std::string mode = "auto";
  std::size_t budget = 1'000'000;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;
  bool catalog = false;
  std::string in;
  int dprime = 0;
  int rho = 0;
};

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("--params must be a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

DistanceRegularGraph load_graph(const Options& o) {
  const auto build = BuildOptions::from_environment();
  if (!o.graph_json.empty()) {
    if (!o.family.empty()) throw InvalidArgument("use either --family or --graph-json, not both");
    Graph g = graph_from_json(read_json_file(o.graph_json));
    if (static_cast<std::size_t>(g.size()) > build.size_budget)
      throw BudgetExceeded("graph has " + std::to_string(g.size()) + " vertices; size budget is " +
                           std::to_string(build.size_budget));
    return DistanceRegularGraph::verify(std::move(g));
  }
  if (o.family.empty()) throw InvalidArgument("a graph is required: --family with --params, or --graph-json");
  return construct(o.family, parse_params(o.params), build);
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.threads = o.threads;
  v.mode = o.mode;
  v.budget = o.budget;
  return v;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_construct(const Options& o) {
  auto g = load_graph(o);
  if (o.format == "text") {
    std::ostringstream os;
    os << g.id() << "  vertices " << g.size() << "  edges " << g.graph().edge_count() << "  "
       << g.intersection_array().str() << '\n';
    emit(o, os.str());
  } else {
    emit(o, dump(graph_to_json(g)));
  }
  return 0;
}

int cmd_analyze(const Options& o) {
  auto a = analyze_graph(load_graph(o));
  Json j{{"schema", kSchema}, {"graph", a.graph.id()}};
  j["scheme"] = scheme_to_json(a.scheme, a.ordering);
  j["classical_parameters"] = a.classical ? to_json(*a.classical) : Json(nullptr);
  j["parameter_array"] = a.array ? to_json(*a.array) : Json(nullptr);
  if (o.format == "text") {
    std::ostringstream os;
    os << a.graph.id() << "  " << a.scheme.ia.str() << '\n';
    os << "  eigenvalues:";
    for (std::size_t i = 0; i < a.scheme.eigenvalues.size(); ++i)
      os << ' ' << a.scheme.eigenvalues[i].pretty() << '^' << a.scheme.multiplicities[i];
    os << "\n  Q-polynomial orderings: " << a.scheme.qpoly_orderings.size() << '\n';
    os << "  classical parameters: " << (a.classical ? a.classical->str() : "none") << '\n';
    os << "  parameter array: " << (a.array ? a.array->str() : "none") << '\n';
    emit(o, os.str());
  } else {
    emit(o, dump(j));
  }
  return 0;
}

int cmd_descendents(const Options& o) {
  auto a = analyze_graph(load_graph(o));
  auto r = run_enumeration(a, verify_options(o), o.mode);
  if (o.format == "text") {
    std::ostringstream os;
    os << a.graph.id() << "  mode " << r.mode << "  " << r.records.size() << " descendents"
       << (r.complete ? " (complete)" : "") << (r.budget_exhausted ? " (budget exhausted)" : "") << '\n';
    os << "  w  w*  rho  |Y|  convex  connected  generator\n";
    for (const auto& rec : r.records) {
      char line[96];
      std::snprintf(line, sizeof line, "  %-2d %-3d %-4d %-4zu %-7s %-10s ", rec.profile.w, rec.profile.w_star,
                    rec.profile.rho, rec.profile.vertices.size(), rec.profile.is_convex ? "yes" : "no",
                    rec.induced_connected ? "yes" : "no");
      os << line << rec.generator << '\n';
    }
    emit(o, os.str());
  } else {
    Json recs = Json::array();
    for (const auto& rec : r.records) recs.push_back(to_json(a.graph, rec));
    Json j{{"schema", kSchema},         {"graph", a.graph.id()},
           {"mode", r.mode},            {"complete", r.complete},
           {"budget_exhausted", r.budget_exhausted},
           {"count", r.records.size()}, {"records", recs}};
    emit(o, dump(j));
  }
  return r.budget_exhausted ? 3 : 0;
}

int cmd_leonard(const Options& o, const std::string& action) {
  Json j{{"schema", kSchema}};
  if (action == "fit") {
    auto a = analyze_graph(load_graph(o));
    if (!a.array) throw InvalidArgument(a.graph.id() + " has no Q-polynomial ordering");
    j["graph"] = a.graph.id();
    j["array"] = to_json(*a.array);
    j["expanded"] = to_json(expand(*a.array));
    j["normalized_intersection_numbers"] = to_json(normalized_intersection_numbers(expand(*a.array)));
  } else {
    if (o.in.empty()) throw InvalidArgument("leonard " + action + " needs --in <array.json>");
    const Json in = read_json_file(o.in);
    const Json& arr = in.contains("array") ? in["array"] : in;
    const auto pa = parameter_array_from_json(arr);
    if (action == "expand") {
      const auto ea = expand(pa);
      j["array"] = to_json(pa);
      j["expanded"] = to_json(ea);
      j["intersection_numbers"] = to_json(intersection_numbers(ea));
      j["normalized_intersection_numbers"] = to_json(normalized_intersection_numbers(ea));
      auto cp = classical_from_case(pa);
      j["classical_parameters"] = cp ? to_json(*cp) : Json(nullptr);
    } else {
      const auto out = rho_descendent(pa, o.dprime, o.rho);
      j["parent"] = to_json(pa);
      j["d_prime"] = o.dprime;
      j["rho"] = o.rho;
      j["array"] = to_json(out);
      j["normalized_intersection_numbers"] = to_json(normalized_intersection_numbers(expand(out)));
    }
  }
  if (o.format == "text") {
    const auto pa = parameter_array_from_json(j["array"]);
    emit(o, pa.str() + "\n");
  } else {
    emit(o, dump(j));
  }
  return 0;
}

int cmd_qmatroid(const Options& o) {
  auto a = analyze_graph(load_graph(o));
  auto r = run_enumeration(a, verify_options(o), o.mode);
  QuantumMatroidReport rep;
  const auto poset = build_poset(r.records, a.graph.size(), a.graph.diameter());
  check_axioms(poset, rep);
  std::optional<long> q;
  if (a.classical) q = a.classical->q;
  check_ud_and_counts(a.graph, poset, q, rep);
  check_intersection_closure(poset, rep);
  const bool ok = rep.qm1 && rep.qm2 && rep.qm3 && rep.qm4 && rep.pair_counts_ok.value_or(false) &&
                  rep.intersection_closed;
  if (o.format == "text") {
    std::ostringstream os;
    auto v = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("-"); };
    os << a.graph.id() << "  " << poset.size() << " descendents (" << r.mode << ")\n"
       << "  QM1 " << rep.qm1 << "  QM2 " << rep.qm2 << "  QM3 " << rep.qm3 << "  QM4 " << rep.qm4 << '\n'
       << "  q " << v(rep.line_regular_q) << "  alpha " << v(rep.zigzag_regular_alpha) << "  beta "
       << v(rep.dual_line_regular_beta) << '\n'
       << "  UD";
    for (bool b : rep.ud_property) os << ' ' << b;
    os << "  intersection-closed " << rep.intersection_closed << '\n';
    for (const auto& w : rep.witnesses) os << "  ! " << w << '\n';
    emit(o, os.str());
  } else {
    Json j{{"schema", kSchema}, {"graph", a.graph.id()}, {"mode", r.mode}, {"size", poset.size()}};
    j["report"] = to_json(rep);
    j["ok"] = ok;
    emit(o, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_verify_all(const Options& o) {
  std::vector<DistanceRegularGraph> graphs;
  if (o.catalog) {
    if (!o.family.empty() || !o.graph_json.empty()) throw InvalidArgument("--catalog takes no graph");
    for (const auto& t : shipped_catalog()) graphs.push_back(construct(t.family, t.params, BuildOptions::from_environment()));
  } else {
    graphs.push_back(load_graph(o));
  }
  bool ok = true;
  Json reports = Json::array();
  std::string text;
  for (auto& g : graphs) {
    auto rep = verify_all(std::move(g), verify_options(o));
    ok = ok && rep.ok();
    if (o.format == "text") text += report_text(rep, o.timing);
    else reports.push_back(to_json(rep, o.timing));
  }
  if (o.format == "text") {
    emit(o, text);
  } else if (o.catalog) {
    emit(o, dump(Json{{"schema", kSchema}, {"reports", reports}, {"ok", ok}}));
  } else {
    emit(o, dump(reports[0]));
  }
  return ok ? 0 : 1;
}

void add_graph_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "graph family")->check(CLI::IsMember(family_names()));
  cmd->add_option("--params", o.params, "family parameters, comma-separated");
  cmd->add_option("--graph-json", o.graph_json, "graph in the exchange format");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void add_enumeration_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "auto, exhaustive, known or search")
      ->check(CLI::IsMember({"auto", "exhaustive", "known", "search"}));
  cmd->add_option("--budget", o.budget, "closure operations for the search enumerator");
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descendents of Q-polynomial distance-regular graphs"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "build a family graph");
  add_graph_options(construct_cmd, o);
  add_output_options(construct_cmd, o);

  auto* analyze_cmd = app.add_subcommand("analyze", "eigenmatrices, orderings, classical parameters, Leonard array");
  add_graph_options(analyze_cmd, o);
  add_output_options(analyze_cmd, o);

  auto* desc_cmd = app.add_subcommand("descendents", "enumerate descendents");
  add_graph_options(desc_cmd, o);
  add_output_options(desc_cmd, o);
  add_enumeration_options(desc_cmd, o);

  auto* leonard_cmd = app.add_subcommand("leonard", "parameter arrays");
  leonard_cmd->require_subcommand(1);
  auto* fit_cmd = leonard_cmd->add_subcommand("fit", "parameter array of a graph");
  add_graph_options(fit_cmd, o);
  add_output_options(fit_cmd, o);
  auto* expand_cmd = leonard_cmd->add_subcommand("expand", "expand an array and derive intersection numbers");
  expand_cmd->add_option("--in", o.in, "array JSON")->required();
  add_output_options(expand_cmd, o);
  auto* descend_cmd = leonard_cmd->add_subcommand("descend", "rho-descendent of an array");
  descend_cmd->add_option("--in", o.in, "array JSON")->required();
  descend_cmd->add_option("--dprime", o.dprime, "diameter of the descendent")->required();
  descend_cmd->add_option("--rho", o.rho, "offset rho");
  add_output_options(descend_cmd, o);

  auto* qm_cmd = app.add_subcommand("qmatroid", "quantum-matroid report for the descendent family");
  add_graph_options(qm_cmd, o);
  add_output_options(qm_cmd, o);
  add_enumeration_options(qm_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify-all", "run every check on a graph");
  add_graph_options(verify_cmd, o);
  add_output_options(verify_cmd, o);
  add_enumeration_options(verify_cmd, o);
  verify_cmd->add_flag("--catalog", o.catalog, "verify every shipped graph");
  verify_cmd->add_flag("--timing", o.timing, "include per-check timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct_cmd) return cmd_construct(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*desc_cmd) return cmd_descendents(o);
    if (*fit_cmd) return cmd_leonard(o, "fit");
    if (*expand_cmd) return cmd_leonard(o, "expand");
    if (*descend_cmd) return cmd_leonard(o, "descend");
    if (*qm_cmd) return cmd_qmatroid(o);
    if (*verify_cmd) return cmd_verify_all(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const NotDistanceRegular& e) {
    std::cerr << "not distance-regular: " << e.what() << '\n';
    return 2;
  } catch (const NonIntegralSpectrum& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleArray& e) {
    std::cerr << "infeasible array: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
