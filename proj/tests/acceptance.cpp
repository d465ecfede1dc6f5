// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]... [--threads T]
//
// Exit status is 0 when the set of failing criteria equals the set named by
// --expect-fail, so a known-red criterion still prints FAIL but does not mask
// regressions elsewhere (or an unexpected pass).

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "drgdesc/errors.hpp"
#include "drgdesc/leonard.hpp"
#include "drgdesc/qmatroid.hpp"
#include "drgdesc/serialize.hpp"
#include "drgdesc/verify.hpp"

using namespace drg;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass || notes.size() < 6) notes.push_back(why);
    pass = false;
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Entry {
  GraphAnalysis a;
  EnumerationResult en;
};

unsigned g_threads = 1;

const Entry& entry(const FamilyTag& tag) {
  static std::map<std::string, Entry> cache;
  auto it = cache.find(tag.id());
  if (it != cache.end()) return it->second;
  Entry e{analyze_graph(construct(tag.family, tag.params)), {}};
  VerifyOptions opt;
  opt.threads = g_threads;
  e.en = run_enumeration(e.a, opt, "auto");
  return cache.emplace(tag.id(), std::move(e)).first->second;
}

std::vector<FamilyTag> catalog() { return shipped_catalog(); }

std::set<VertexSet> sets_of(const std::vector<DescendentRecord>& recs) {
  std::set<VertexSet> s;
  for (const auto& r : recs) s.insert(r.profile.vertices);
  return s;
}

std::set<int> subset_label(const std::string& label) {
  std::set<int> s;
  std::string body = label.substr(1, label.size() - 2);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  for (int v; in >> v;) s.insert(v);
  return s;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ------------------------------------------------------------- criterion 1

// Y is {x : x agrees with some word on the coordinates in C}: the coordinates
// constant on Y determine it, and |Y| = l^(d-|C|).
bool is_subcube(const DistanceRegularGraph& g, const VertexSet& y, int d, int l) {
  const auto& lab = g.graph().labels;
  std::vector<int> fixed;
  for (int k = 0; k < d; ++k) {
    bool same = true;
    for (int v : y) same &= lab[v][k] == lab[y[0]][k];
    if (same) fixed.push_back(k);
  }
  long want = 1;
  for (int k = 0; k < d - static_cast<int>(fixed.size()); ++k) want *= l;
  if (static_cast<long>(y.size()) != want) return false;
  for (int v : y)
    for (int k : fixed)
      if (lab[v][k] != lab[y[0]][k]) return false;
  return true;
}

Outcome hamming_completeness() {
  Outcome o;
  for (auto [d, expect] : {std::pair{3, 27}, std::pair{4, 81}}) {
    const auto start = Clock::now();
    const auto g = hamming(d, 2);
    const auto s = build_scheme(g);
    const auto ord = preferred_ordering(s, detect_classical(g.intersection_array()));
    EnumerationOptions eo;
    eo.threads = g_threads;
    const auto r = enumerate_exhaustive(g, s, ord, eo);
    const double secs = since(start);
    int subcubes = 0;
    for (const auto& rec : r.records) subcubes += is_subcube(g, rec.profile.vertices, d, 2);
    std::ostringstream line;
    line << g.id() << ": " << r.records.size() << " descendents, " << subcubes << " of the form {x : u ⊆ x}, "
         << secs << " s";
    o.note(line.str());
    if (!r.complete || static_cast<int>(r.records.size()) != expect || subcubes != expect || secs >= 60)
      o.fail(g.id() + " expected " + std::to_string(expect) + " subcubes within 60 s");
  }
  return o;
}

// ------------------------------------------------------------- criterion 2

Outcome johnson_completeness() {
  Outcome o;
  const auto start = Clock::now();
  const auto g = johnson(6, 3);
  const auto s = build_scheme(g);
  const auto ord = preferred_ordering(s, detect_classical(g.intersection_array()));
  EnumerationOptions eo;
  eo.threads = g_threads;
  const auto ex = enumerate_exhaustive(g, s, ord, eo);
  const double secs = since(start);
  const auto known = enumerate_known_forms(g, s, ord, eo);

  // Label-level oracle for the two shapes, independent of the generator.
  int up = 0, down = 0, other = 0;
  for (const auto& rec : ex.records) {
    std::set<int> meet = subset_label(g.graph().labels[rec.profile.vertices[0]]), join;
    for (int v : rec.profile.vertices) {
      const auto x = subset_label(g.graph().labels[v]);
      std::set<int> m;
      std::set_intersection(meet.begin(), meet.end(), x.begin(), x.end(), std::inserter(m, m.begin()));
      meet = m;
      join.insert(x.begin(), x.end());
    }
    const long n = static_cast<long>(rec.profile.vertices.size());
    if (n == binom(6 - static_cast<long>(meet.size()), 3 - static_cast<long>(meet.size()))) ++up;
    else if (n == binom(static_cast<long>(join.size()), 3)) ++down;
    else ++other;
  }
  std::ostringstream line;
  line << "exhaustive " << ex.records.size() << " (" << up << " u ⊆ x, " << down << " x ⊆ u only, " << other
       << " other), known forms " << known.records.size() << ", " << secs << " s";
  o.note(line.str());
  if (!ex.complete) o.fail("exhaustive run not complete");
  if (other != 0) o.fail("descendent outside both shapes");
  if (down == 0) o.fail("no x ⊆ u descendents although ν = 2d");
  std::vector<VertexSet> a, b;
  for (const auto& r : ex.records) a.push_back(r.profile.vertices);
  for (const auto& r : known.records) b.push_back(r.profile.vertices);
  if (a != b) o.fail("exhaustive and known-form canonical sets differ");
  if (secs >= 600) o.fail("runtime over 10 minutes");
  return o;
}

// ------------------------------------------------------------- criterion 3

Outcome fundamental_inequality() {
  Outcome o;
  std::mt19937_64 rng(3);
  long total = 0;
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    const int n = e.a.graph.size(), d = e.a.graph.diameter();
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
      VertexSet y;
      while (y.empty())
        for (int v = 0; v < n; ++v)
          if (rng() & 1U) y.push_back(v);
      const auto inner = inner_distribution(e.a.graph, y);
      int w = d;
      while (inner[w] == 0) --w;
      if (w + dual_width(e.a.scheme, *e.a.ordering, inner) < d) ++bad;
      ++total;
    }
    if (bad) o.fail(tag.id() + ": " + std::to_string(bad) + " exceptions");
  }
  o.note(std::to_string(total) + " uniform random subsets over " + std::to_string(catalog().size()) + " graphs");
  return o;
}

// ------------------------------------------------------------- criterion 4

Outcome descendent_structure() {
  Outcome o;
  long checked = 0, convex = 0, closed = 0;
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    const auto& g = e.a.graph;
    const int d = g.diameter();
    const bool alpha0 = e.a.classical && e.a.classical->alpha.is_zero();
    for (const auto& r : e.en.records) {
      const auto& y = r.profile.vertices;
      const auto bits = Bitset::from_vector(static_cast<std::size_t>(g.size()), y);
      ++checked;
      if (completely_regular_radius(g, bits) != r.profile.w_star)
        o.fail(tag.id() + ": descendent of size " + std::to_string(y.size()) + " not completely regular with radius w*");
      if (!e.a.classical || r.profile.w <= 1 || r.profile.w >= d) continue;
      ++convex;
      if (!is_convex(g, y, bits)) o.fail(tag.id() + ": non-convex descendent of width " + std::to_string(r.profile.w));
      if (alpha0) {
        ++closed;
        if (!is_strongly_closed(g, y, bits)) o.fail(tag.id() + ": descendent not strongly closed");
      }
    }
  }
  o.note(std::to_string(checked) + " descendents; " + std::to_string(convex) + " convexity and " +
         std::to_string(closed) + " strong-closure checks");
  return o;
}

// ------------------------------------------------------------- criterion 5

Outcome inheritance() {
  Outcome o;
  long checked = 0, literal = 0, low = 0;
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    if (!e.a.classical) {
      o.fail(tag.id() + " has no classical parameters");
      continue;
    }
    for (const auto& r : e.en.records) {
      if (!r.induced_connected || r.profile.w == 0) continue;
      ++checked;
      ClassicalParameters want = *e.a.classical;
      want.d = r.profile.w;
      const auto got = detect_classical(*r.induced_ia);
      if (got && *got == want) ++literal;
      if (r.profile.w <= 2) {
        // Parameters of diameter <= 2 arrays are not unique; membership is
        // the meaningful test there.
        ++low;
        if (!satisfies_classical(*r.induced_ia, want))
          o.fail(tag.id() + ": " + r.induced_ia->str() + " does not fit " + want.str());
      } else if (!got || !(*got == want)) {
        o.fail(tag.id() + ": detect_classical(" + r.induced_ia->str() + ") = " + (got ? got->str() : "none") +
               ", expected " + want.str());
      }
    }
  }
  o.note(std::to_string(checked) + " connected descendents; " + std::to_string(literal) +
         " reproduce (w,q,α,β) as the first detected tuple, " + std::to_string(low) +
         " of diameter <= 2 checked by membership");
  return o;
}

// ------------------------------------------------------------- criterion 6

Outcome leonard_round_trip() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto rnd = [&](bool nonzero) {
    Rational v(BigInt(num(rng)), BigInt(den(rng)));
    while (nonzero && v.is_zero()) v = Rational(BigInt(num(rng)), BigInt(den(rng)));
    return v;
  };
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    const auto ea = expand(fit_from_graph(e.a.scheme, *e.a.ordering));
    const auto n = intersection_numbers(ea);
    const auto& ia = e.a.graph.intersection_array();
    for (int i = 0; i <= ea.d; ++i)
      if (n.b[i] / n.c[1] != Rational(ia.b[i]) / ia.c[1] || n.c[i] / n.c[1] != Rational(ia.c[i]) / ia.c[1])
        o.fail(tag.id() + ": round trip differs at index " + std::to_string(i));
    const auto base = normalized_intersection_numbers(ea);
    for (int t = 0; t < 100; ++t)
      if (normalized_intersection_numbers(affine_transform(ea, rnd(true), rnd(true), rnd(false), rnd(false))) != base)
        o.fail(tag.id() + ": affine transformation changed b_i/c_1 or c_i/c_1");
  }
  o.note(std::to_string(catalog().size()) + " graphs, 100 affine transformations each");
  return o;
}

// ------------------------------------------------------------- criterion 7

Outcome rho_consistency() {
  Outcome o;
  long checked = 0;
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    const auto& pa = *e.a.array;
    std::map<std::pair<std::string, int>, IntersectionNumbers> graph_side;
    std::map<int, IntersectionNumbers> predicted;
    for (const auto& r : e.en.records) {
      if (!r.induced_connected || r.profile.w == 0) continue;
      ++checked;
      const int w = r.profile.w;
      const auto key = std::pair{r.induced_ia->str(), r.profile.w_star};
      if (!graph_side.count(key)) {
        const auto sub = build_scheme(*r.induced_ia);
        const auto ord = induced_ordering(e.a.scheme, *e.a.ordering, r.profile.w_star, sub);
        if (!ord) {
          o.fail(tag.id() + ": no induced ordering on " + r.induced_ia->str());
          continue;
        }
        graph_side[key] = normalized_intersection_numbers(graph_parameter_array(sub, *ord));
      }
      if (!predicted.count(w)) predicted[w] = normalized_intersection_numbers(expand(rho_descendent(pa, w, 0)));
      if (graph_side[key] != predicted[w])
        o.fail(tag.id() + ": " + r.induced_ia->str() + " differs from the 0-descendent at d'=" + std::to_string(w));
    }
  }
  o.note(std::to_string(checked) + " connected descendents");
  return o;
}

// ------------------------------------------------------------- criterion 8

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

bool qm_ok(const QuantumMatroidReport& r, long q, long alpha, long beta) {
  const bool ud = std::all_of(r.ud_property.begin(), r.ud_property.end(), [](bool b) { return b; });
  return r.qm1 && r.qm2 && r.qm3 && r.qm4 && r.line_regular_q == q && r.zigzag_regular_alpha == alpha &&
         r.dual_line_regular_beta == beta && r.pair_counts_ok == true && ud;
}

std::string qm_summary(const QuantumMatroidReport& r) {
  std::ostringstream os;
  os << "QM1-4 " << r.qm1 << r.qm2 << r.qm3 << r.qm4 << ", (q,α,β)=(" << opt_str(r.line_regular_q) << ","
     << opt_str(r.zigzag_regular_alpha) << "," << opt_str(r.dual_line_regular_beta) << "), pair counts "
     << (r.pair_counts_ok == true ? "match" : "differ");
  return os.str();
}

QuantumMatroidReport qm_report(const Entry& e, const std::vector<DescendentRecord>& recs) {
  const auto p = build_poset(recs, e.a.graph.size(), e.a.graph.diameter());
  QuantumMatroidReport r;
  check_axioms(p, r);
  check_ud_and_counts(e.a.graph, p, e.a.classical->q, r);
  return r;
}

Outcome quantum_matroid() {
  Outcome o;
  struct Row {
    FamilyTag tag;
    long q, alpha, beta;
  };
  const std::vector<Row> rows = {{{"hamming", {3, 2}}, 1, 0, 1},
                                 {{"hamming", {4, 2}}, 1, 0, 1},
                                 {{"hamming", {3, 3}}, 1, 0, 2},
                                 {{"johnson", {6, 3}}, 1, 1, 3}};
  for (const auto& row : rows) {
    const auto& e = entry(row.tag);
    const auto r = qm_report(e, e.en.records);
    std::string line = row.tag.id() + " full family (" + std::to_string(e.en.records.size()) + ", " + e.en.mode +
                       "): " + qm_summary(r);
    if (!qm_ok(r, row.q, row.alpha, row.beta)) {
      o.fail(line);
      for (std::size_t i = 0; i < r.witnesses.size() && i < 3; ++i) o.note("  " + r.witnesses[i]);
      if (row.tag.family == "johnson") {
        const auto up = upward_subfamily(e.a.graph, e.en.records);
        const auto ru = qm_report(e, up);
        o.note("info: " + row.tag.id() + " {x : u ⊆ x} subfamily (" + std::to_string(up.size()) + "): " +
               qm_summary(ru) + (qm_ok(ru, row.q, row.alpha, row.beta) ? " -> passes" : " -> fails"));
      }
    } else {
      o.note(line);
    }
  }
  return o;
}

// ------------------------------------------------------------- criterion 9

Outcome negative_structure() {
  Outcome o;
  for (const FamilyTag& tag : {FamilyTag{"doob", {1, 1}}, FamilyTag{"halved_cube", {6}}}) {
    const auto& e = entry(tag);
    const auto& g = e.a.graph;
    const auto forms = known_form_sets(g);
    const auto recs = analyze_sets(g, e.a.scheme, *e.a.ordering, forms, g_threads);
    std::set<int> widths;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const auto& p = recs[i].profile;
      widths.insert(p.w);
      if (!p.is_descendent) o.fail(tag.id() + ": " + forms[i].generator + " set is not a descendent");
      if (p.w != forms[i].expected_width) o.fail(tag.id() + ": " + forms[i].generator + " has the wrong width");
    }
    const std::set<int> stated{0, 1, 2, 3};  // nontrivial widths 1 and 2 in both families
    if (widths != stated) o.fail(tag.id() + ": widths differ from the classification");

    const auto search = enumerate_search(g, e.a.scheme, *e.a.ordering);
    const auto known = sets_of(recs);
    int outside = 0;
    for (const auto& r : search.records) outside += !known.count(r.profile.vertices);
    if (outside) o.fail(tag.id() + ": search found " + std::to_string(outside) + " sets outside the classified forms");

    const auto p = build_poset(recs, g.size(), g.diameter());
    QuantumMatroidReport r;
    check_ud_and_counts(g, p, std::nullopt, r);
    std::string witness;
    for (const auto& w : r.witnesses)
      if (w.rfind("UD_", 0) == 0 && witness.empty()) witness = w;
    const bool ud_fails = std::find(r.ud_property.begin(), r.ud_property.end(), false) != r.ud_property.end();
    if (!ud_fails || witness.empty()) o.fail(tag.id() + ": UD holds or no witness recorded");
    o.note(tag.id() + ": " + std::to_string(forms.size()) + " classified sets, search found " +
           std::to_string(search.records.size()) + (search.budget_exhausted ? " (budget exhausted)" : "") + "; " +
           witness);
  }
  return o;
}

// ------------------------------------------------------------ criterion 10

Outcome connectivity_prediction() {
  Outcome o;
  long checked = 0;
  for (const auto& tag : catalog()) {
    const auto& e = entry(tag);
    const int d = e.a.graph.diameter();
    for (const auto& r : e.en.records) {
      if (r.profile.w_star <= 0 || r.profile.w_star >= d) continue;
      ++checked;
      const bool direct = is_connected(induced_subgraph(e.a.graph, r.profile.vertices));
      if (predict_connectivity(*e.a.array, r.profile.w_star) != direct)
        o.fail(tag.id() + ": prediction differs for a descendent with w*=" + std::to_string(r.profile.w_star));
    }
  }
  o.note(std::to_string(checked) + " descendents with 0 < w* < d");
  return o;
}

// ------------------------------------------------------------ criterion 11

std::pair<int, std::string> capture(const std::string& args) {
  const std::string cmd = std::string(DRGDESC_BIN) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[65536];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
  Outcome o;
  const unsigned many = std::max(4U, std::thread::hardware_concurrency());
  const auto a = capture("verify-all --catalog --threads 1");
  const auto b = capture("verify-all --catalog --threads 1");
  const auto c = capture("verify-all --catalog --threads " + std::to_string(many));
  if (a.first != 0 || b.first != 0 || c.first != 0)
    o.fail("verify-all exit codes " + std::to_string(a.first) + "," + std::to_string(b.first) + "," +
           std::to_string(c.first));
  if (a.second.empty()) o.fail("empty output");
  if (a.second != b.second) o.fail("two single-threaded runs differ");
  if (a.second != c.second) o.fail("1 and " + std::to_string(many) + " threads differ");
  o.note(std::to_string(a.second.size()) + " bytes, 1 vs 1 vs " + std::to_string(many) + " threads");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  g_threads = std::max(1U, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_fail.insert(std::stoi(argv[++i]));
    } else if (arg == "--threads" && i + 1 < argc) {
      g_threads = static_cast<unsigned>(std::max(1, std::stoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]... [--threads T]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hamming completeness", hamming_completeness},
      {"Johnson completeness", johnson_completeness},
      {"fundamental inequality", fundamental_inequality},
      {"descendent structure", descendent_structure},
      {"inheritance of classical parameters", inheritance},
      {"Leonard round trip", leonard_round_trip},
      {"rho-descendent consistency", rho_consistency},
      {"quantum matroid", quantum_matroid},
      {"negative structure (Doob, halved cube)", negative_structure},
      {"connectivity prediction", connectivity_prediction},
      {"determinism", determinism},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-40s [%.1fs]", o.pass ? "PASS" : "FAIL", id,
                  criteria[k].first.c_str(), since(start));
    std::cout << head << '\n';
    for (const auto& n : o.notes) std::cout << "          " << n << '\n';
    std::cout.flush();
  }

  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expected_fail.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected_fail) std::cout << ' ' << id;
  }
  std::cout << '\n';
  if (failed != expected_fail) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
