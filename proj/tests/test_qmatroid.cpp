#include <doctest.h>

#include <map>

#include "drgdesc/errors.hpp"
#include "drgdesc/qmatroid.hpp"
#include "drgdesc/verify.hpp"

using namespace drg;

namespace {

struct Family {
  GraphAnalysis a;
  std::vector<DescendentRecord> recs;
};

Family family(DistanceRegularGraph g, const std::string& mode) {
  Family f{analyze_graph(std::move(g)), {}};
  f.recs = run_enumeration(f.a, VerifyOptions{}, mode).records;
  return f;
}

std::map<int, int> rank_counts(const DescendentPoset& p) {
  std::map<int, int> m;
  for (int r : p.rank) ++m[r];
  return m;
}

bool all_true(const std::vector<bool>& v) {
  for (bool b : v)
    if (!b) return false;
  return true;
}

}  // namespace

TEST_CASE("H(3,2) descendent poset") {
  const auto f = family(hamming(3, 2), "exhaustive");
  const auto p = build_poset(f.recs, 8, 3);
  CHECK(p.size() == 27);
  CHECK(rank_counts(p) == std::map<int, int>{{0, 1}, {1, 6}, {2, 12}, {3, 8}});
  REQUIRE(p.bottom);
  CHECK(p.elements[*p.bottom].size() == 8);
  for (std::size_t a = 0; a < p.size(); ++a) {
    // Subcubes: a face of m vertices lies in 3 - log2(m) faces of twice the
    // size and contains 2 log2(m) faces of half the size.
    const auto m = p.elements[a].size();
    const std::size_t want_lower = m == 8 ? 0 : (m == 4 ? 1 : (m == 2 ? 2 : 3));
    const std::size_t want_upper = m == 1 ? 0 : (m == 2 ? 2 : (m == 4 ? 4 : 6));
    CHECK(p.lower_covers[a].size() == want_lower);
    CHECK(p.upper_covers[a].size() == want_upper);
    // Cover relation agrees with one-step inclusion of vertex sets.
    for (int b : p.upper_covers[a]) {
      CHECK(p.sets[b].is_subset_of(p.sets[a]));
      CHECK(p.elements[b].size() * 2 == m);
      CHECK(p.covers(b, static_cast<int>(a)));
    }
  }

  QuantumMatroidReport rep;
  check_axioms(p, rep);
  CHECK(rep.qm1);
  CHECK(rep.qm2);
  CHECK(rep.qm3);
  CHECK(rep.qm4);
  CHECK(rep.line_regular_q == 1);
  CHECK(rep.zigzag_regular_alpha == 0);
  CHECK(rep.dual_line_regular_beta == 1);
  check_ud_and_counts(f.a.graph, p, 1, rep);
  CHECK(all_true(rep.ud_property));
  CHECK(rep.pair_counts_ok == true);
  check_intersection_closure(p, rep);
  CHECK(rep.intersection_closed);
  CHECK(rep.witnesses.empty());

  // Direct count: every edge lies in exactly two 2-faces.
  for (const auto& e : f.recs) {
    if (e.profile.w != 1) continue;
    int faces = 0;
    for (const auto& y : f.recs)
      if (y.profile.w == 2 && std::includes(y.profile.vertices.begin(), y.profile.vertices.end(),
                                            e.profile.vertices.begin(), e.profile.vertices.end()))
        ++faces;
    CHECK(faces == 2);
  }
}

TEST_CASE("singletons and X alone") {
  const auto f = family(hamming(3, 2), "exhaustive");
  std::vector<DescendentRecord> sub;
  for (const auto& r : f.recs)
    if (r.profile.w == 0 || r.profile.w == 3) sub.push_back(r);
  const auto p = build_poset(sub, 8, 3);
  REQUIRE(p.bottom);
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (static_cast<int>(a) == *p.bottom) continue;
    CHECK(p.lower_covers[a] == std::vector<int>{*p.bottom});
    CHECK(p.upper_covers[a].empty());
  }
  QuantumMatroidReport rep;
  check_axioms(p, rep);
  CHECK_FALSE(rep.qm1);
  CHECK_THROWS_AS(build_poset({sub[0], sub[0]}, 8, 3), InvalidArgument);
}

TEST_CASE("J(6,3): the full family and the upward subfamily") {
  const auto f = family(johnson(6, 3), "exhaustive");
  const auto p = build_poset(f.recs, 20, 3);
  REQUIRE(p.bottom);
  CHECK(p.elements[*p.bottom].size() == 20);
  int maximal = 0;
  for (std::size_t a = 0; a < p.size(); ++a) maximal += p.upper_covers[a].empty();
  CHECK(maximal == 20);

  // Both clique shapes have width 1, so a vertex lies in 3 + 3 of them and
  // two adjacent vertices share two.
  QuantumMatroidReport full;
  check_axioms(p, full);
  check_ud_and_counts(f.a.graph, p, 1, full);
  check_intersection_closure(p, full);
  CHECK_FALSE(full.qm2);
  CHECK_FALSE(full.ud_property[1]);
  CHECK(full.pair_counts_ok == false);
  CHECK_FALSE(full.intersection_closed);
  for (int v = 0; v < 20; ++v) {
    int cliques = 0;
    for (const auto& r : f.recs)
      cliques += r.profile.w == 1 && std::binary_search(r.profile.vertices.begin(), r.profile.vertices.end(), v);
    CHECK(cliques == 6);
  }

  const auto up = upward_subfamily(f.a.graph, f.recs);
  CHECK(up.size() == 42);
  const auto q = build_poset(up, 20, 3);
  QuantumMatroidReport rep;
  check_axioms(q, rep);
  CHECK(rep.qm1);
  CHECK(rep.qm2);
  CHECK(rep.qm3);
  CHECK(rep.qm4);
  CHECK(rep.line_regular_q == 1);
  CHECK(rep.zigzag_regular_alpha == 1);
  CHECK(rep.dual_line_regular_beta == 3);
  check_ud_and_counts(f.a.graph, q, 1, rep);
  CHECK(all_true(rep.ud_property));
  CHECK(rep.pair_counts_ok == true);
  check_intersection_closure(q, rep);
  CHECK(rep.intersection_closed);
  // Each vertex is in [3 choose 1]_1 = 3 width-1 members.
  for (int v = 0; v < 20; ++v) {
    int cliques = 0;
    for (const auto& r : up)
      cliques += r.profile.w == 1 && std::binary_search(r.profile.vertices.begin(), r.profile.vertices.end(), v);
    CHECK(cliques == qbinomial(3, 1, 1).to_long());
  }
}

TEST_CASE("H(4,2) and H(3,3) families") {
  const auto h4 = family(hamming(4, 2), "exhaustive");
  const auto p4 = build_poset(h4.recs, 16, 4);
  QuantumMatroidReport r4;
  check_axioms(p4, r4);
  check_ud_and_counts(h4.a.graph, p4, 1, r4);
  check_intersection_closure(p4, r4);
  CHECK((r4.qm1 && r4.qm2 && r4.qm3 && r4.qm4));
  CHECK(r4.dual_line_regular_beta == 1);
  CHECK(r4.pair_counts_ok == true);
  CHECK(r4.intersection_closed);

  const auto h33 = family(hamming(3, 3), "known");
  const auto p33 = build_poset(h33.recs, 27, 3);
  QuantumMatroidReport r33;
  check_axioms(p33, r33);
  CHECK((r33.qm1 && r33.qm2 && r33.qm3 && r33.qm4));
  CHECK(r33.dual_line_regular_beta == 2);
}

TEST_CASE("Doob graph: recorded failures") {
  const auto f = family(doob(1, 1), "known");
  const auto p = build_poset(f.recs, 64, 3);
  QuantumMatroidReport rep;
  check_axioms(p, rep);
  check_ud_and_counts(f.a.graph, p, std::nullopt, rep);
  check_intersection_closure(p, rep);
  // {p} x K_4 has dual width 2 yet covers X directly.
  CHECK_FALSE(rep.qm1);
  CHECK(rep.ud_property[0]);
  CHECK_FALSE(rep.ud_property[1]);
  CHECK_FALSE(rep.ud_property[2]);
  CHECK(rep.intersection_closed);
  bool has_ud_witness = false;
  for (const auto& w : rep.witnesses) has_ud_witness |= w.rfind("UD_1", 0) == 0;
  CHECK(has_ud_witness);
}
