#include "drgdesc/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "drgdesc/errors.hpp"

namespace drg {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidArgument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace {
Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

std::vector<Rational> rationals_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw InvalidArgument(std::string("missing array '") + key + "'");
  std::vector<Rational> out;
  for (const auto& v : j[key]) out.push_back(rational_from_json(v));
  return out;
}
}  // namespace

Json to_json(const IntersectionArray& ia) {
  return Json{{"b", ia.b}, {"c", ia.c}, {"text", ia.str()}};
}

Json to_json(const ClassicalParameters& cp) {
  return Json{{"d", cp.d}, {"q", cp.q}, {"alpha", to_json(cp.alpha)}, {"beta", to_json(cp.beta)}};
}

Json to_json(const ParameterArray& pa) {
  Json sc = Json::object();
  for (const auto& [name, v] : pa.scalars()) sc[name] = to_json(v);
  return Json{{"case", case_name(pa.kind)}, {"d", pa.d}, {"scalars", sc}};
}

ParameterArray parameter_array_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("case") || !j.contains("d") || !j.contains("scalars"))
    throw InvalidArgument("parameter array needs \"case\", \"d\" and \"scalars\"");
  std::map<std::string, Rational> values;
  for (const auto& [k, v] : j["scalars"].items()) values[k] = rational_from_json(v);
  return ParameterArray::from_scalars(parse_case(j["case"].get<std::string>()), j["d"].get<int>(), values);
}

Json to_json(const ExpandedArray& ea) {
  return Json{{"d", ea.d},
              {"theta", rationals(ea.theta)},
              {"theta_star", rationals(ea.theta_star)},
              {"varphi", rationals(ea.phi)},
              {"phi", rationals(ea.phi_dn)}};
}

ExpandedArray expanded_array_from_json(const Json& j) {
  ExpandedArray ea;
  ea.d = j.at("d").get<int>();
  ea.theta = rationals_from(j, "theta");
  ea.theta_star = rationals_from(j, "theta_star");
  ea.phi = rationals_from(j, "varphi");
  ea.phi_dn = rationals_from(j, "phi");
  return ea;
}

Json to_json(const IntersectionNumbers& n) { return Json{{"b", rationals(n.b)}, {"c", rationals(n.c)}}; }

Json graph_to_json(const DistanceRegularGraph& g) {
  Json j{{"schema", kSchema}, {"id", g.id()}};
  if (g.family()) j["family"] = Json{{"name", g.family()->family}, {"params", g.family()->params}};
  j["n"] = g.size();
  j["intersection_array"] = to_json(g.intersection_array());
  j["labels"] = g.graph().labels;
  Json edges = Json::array();
  for (int x = 0; x < g.size(); ++x)
    for (int y : g.graph().adj[x])
      if (x < y) edges.push_back({x, y});
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges")) throw InvalidArgument("graph JSON needs \"edges\"");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& v : j["labels"]) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  int n = static_cast<int>(labels.size());
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw InvalidArgument("\"n\" must be an integer");
    n = j["n"].get<int>();
  } else if (!j.contains("labels")) {
    throw InvalidArgument("graph JSON needs \"n\" or \"labels\"");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidArgument("graph JSON has " + std::to_string(labels.size()) + " labels for n = " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InvalidArgument("edges must be pairs of vertex indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges, labels);
}

Json scheme_to_json(const SchemeData& s, const std::optional<QPolyOrdering>& ord) {
  Json j{{"d", s.d}, {"vertex_count", s.vertex_count}, {"intersection_array", to_json(s.ia)}};
  j["eigenvalues"] = rationals(s.eigenvalues);
  j["multiplicities"] = s.multiplicities;
  j["valencies"] = s.valencies;
  Json orders = Json::array();
  for (const auto& o : s.qpoly_orderings) orders.push_back(o.perm);
  j["qpolynomial_orderings"] = orders;
  if (ord) {
    j["ordering"] = Json{{"perm", ord->perm},
                         {"dual_eigenvalues", rationals(ord->dual_eigenvalues)},
                         {"a_star", rationals(ord->a_star)},
                         {"b_star", rationals(ord->b_star)},
                         {"c_star", rationals(ord->c_star)}};
  }
  return j;
}

Json to_json(const DistanceRegularGraph& g, const DescendentRecord& r) {
  Json labels = Json::array();
  for (int v : r.profile.vertices) labels.push_back(g.graph().labels[v]);
  Json j{{"vertices", labels},
         {"w", r.profile.w},
         {"w_star", r.profile.w_star},
         {"rho", r.profile.rho},
         {"convex", r.profile.is_convex},
         {"completely_regular", r.profile.is_completely_regular},
         {"strongly_closed", r.profile.is_strongly_closed},
         {"induced_connected", r.induced_connected}};
  j["induced_array"] = r.induced_ia ? to_json(*r.induced_ia) : Json(nullptr);
  j["predicted_connected"] = r.predicted_connected ? Json(*r.predicted_connected) : Json(nullptr);
  j["generator"] = r.generator;
  return j;
}

Json to_json(const QuantumMatroidReport& r) {
  auto opt = [](const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); };
  Json ud = Json::array();
  for (bool b : r.ud_property) ud.push_back(b);
  return Json{{"qm1", r.qm1},
              {"qm2", r.qm2},
              {"qm3", r.qm3},
              {"qm4", r.qm4},
              {"line_regular_q", opt(r.line_regular_q)},
              {"zigzag_regular_alpha", opt(r.zigzag_regular_alpha)},
              {"dual_line_regular_beta", opt(r.dual_line_regular_beta)},
              {"ud_property", ud},
              {"pair_counts_ok", r.pair_counts_ok ? Json(*r.pair_counts_ok) : Json(nullptr)},
              {"intersection_closed", r.intersection_closed},
              {"witnesses", r.witnesses}};
}

Json to_json(const VerificationReport& r, bool timing) {
  Json j{{"schema", kSchema}, {"graph", r.graph_id}, {"intersection_array", to_json(r.ia)}};
  j["classical_parameters"] = r.classical ? to_json(*r.classical) : Json(nullptr);
  j["parameter_array"] = r.array ? to_json(*r.array) : Json(nullptr);
  j["enumeration"] = Json{{"mode", r.enumeration_mode},
                          {"complete", r.enumeration_complete},
                          {"count", r.descendents.size()}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"anchor", c.anchor}, {"status", c.status}, {"witness", c.witness}};
    if (timing) cj["seconds"] = c.seconds;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (r.qmatroid) {
    j["quantum_matroid"] = to_json(*r.qmatroid);
    j["quantum_matroid"]["family"] = r.qmatroid_family;
  }
  j["ok"] = r.ok();
  return j;
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << r.graph_id << "  " << r.ia.str();
  if (r.classical) os << "  classical " << r.classical->str();
  if (r.array) os << "  case " << case_name(r.array->kind);
  os << '\n';
  for (const auto& c : r.checks) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-8s %-28s", c.status.c_str(), c.name.c_str());
    os << line << c.witness;
    if (timing) {
      std::snprintf(line, sizeof line, "  [%.3fs]", c.seconds);
      os << line;
    }
    os << '\n';
  }
  os << (r.ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

}  // namespace drg
