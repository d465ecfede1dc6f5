#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "drgdesc/errors.hpp"
#include "drgdesc/subsets.hpp"

using namespace drg;

namespace {

struct Ctx {
  DistanceRegularGraph g;
  SchemeData s;
  QPolyOrdering ord;
  explicit Ctx(DistanceRegularGraph graph)
      : g(std::move(graph)), s(build_scheme(g)), ord(preferred_ordering(s, std::nullopt)) {}
};

VertexSet by_label(const DistanceRegularGraph& g, bool (*keep)(const std::string&)) {
  VertexSet y;
  for (int v = 0; v < g.size(); ++v)
    if (keep(g.graph().labels[v])) y.push_back(v);
  return y;
}

// Width and dual width straight from the dense matrices A_i, E_i.
std::pair<int, int> dense_widths(const Ctx& c, const VertexSet& y) {
  const int n = c.g.size();
  auto quad = [&](const ExactMatrix& m) {
    Rational t;
    for (int a : y)
      for (int b : y) t += m(a, b);
    return t;
  };
  int w = 0, ws = 0;
  for (int i = 0; i <= c.s.d; ++i) {
    if (!quad(distance_matrix(c.g, i)).is_zero()) w = i;
    if (!quad(idempotent_matrix(c.g, c.s, c.ord.perm[i])).is_zero()) ws = i;
  }
  (void)n;
  return {w, ws};
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
  VertexSet y;
  while (y.empty())
    for (int v = 0; v < n; ++v)
      if (rng() & 1U) y.push_back(v);
  return y;
}

std::set<VertexSet> vertex_sets(const std::vector<DescendentRecord>& recs) {
  std::set<VertexSet> out;
  for (const auto& r : recs) out.insert(r.profile.vertices);
  return out;
}

}  // namespace

TEST_CASE("trivial descendents") {
  for (auto g : {hamming(3, 2), johnson(6, 3), halved_cube(6)}) {
    const Ctx c(std::move(g));
    const auto one = profile(c.g, c.s, c.ord, {5});
    CHECK(one.w == 0);
    CHECK(one.w_star == c.s.d);
    CHECK(one.is_descendent);
    VertexSet all(c.g.size());
    std::iota(all.begin(), all.end(), 0);
    const auto x = profile(c.g, c.s, c.ord, all);
    CHECK(x.w == c.s.d);
    CHECK(x.w_star == 0);
    CHECK(x.is_descendent);
  }
}

TEST_CASE("2-subcube of the 3-cube") {
  const Ctx c(hamming(3, 2));
  const VertexSet face = by_label(c.g, [](const std::string& l) { return l[2] == '0'; });
  REQUIRE(face.size() == 4);
  const auto p = profile(c.g, c.s, c.ord, face);
  CHECK(p.w == 2);
  CHECK(p.w_star == 1);
  CHECK(p.is_descendent);
  CHECK(p.is_convex);
  CHECK(p.is_completely_regular);
  CHECK(p.rho == 1);
  CHECK(dense_widths(c, face) == std::pair{2, 1});

  const auto rec = induced_analysis(c.g, c.s, c.ord, p);
  CHECK(rec.induced_connected);
  REQUIRE(rec.induced_ia);
  CHECK(rec.induced_ia->str() == "{2,1;1,2}");

  // An edge inside the face: dual width 1 in the face, 2 in the cube.
  const VertexSet edge = by_label(c.g, [](const std::string& l) { return l[1] == '0' && l[2] == '0'; });
  CHECK(profile(c.g, c.s, c.ord, edge).w_star == 2);
  const auto sub = DistanceRegularGraph::verify(induced_subgraph(c.g, face));
  const Ctx face_ctx(sub);
  VertexSet local;
  for (std::size_t i = 0; i < face.size(); ++i)
    if (std::binary_search(edge.begin(), edge.end(), face[i])) local.push_back(static_cast<int>(i));
  CHECK(profile(face_ctx.g, face_ctx.s, face_ctx.ord, local).w_star == 1);

  std::vector<VertexSet> cands{edge, face, {face[0]}, {face[0], face[3]}};
  CHECK(descendents_within(c.g, c.s, c.ord, p, cands).empty());
}

TEST_CASE("Johnson descendent {x : 1 in x} induces J(5,2)") {
  const Ctx c(johnson(6, 3));
  const VertexSet y = by_label(c.g, [](const std::string& l) { return l.find('1') != std::string::npos; });
  REQUIRE(y.size() == 10);
  const auto p = profile(c.g, c.s, c.ord, y);
  CHECK(p.w == 2);
  CHECK(p.w_star == 1);
  CHECK(p.is_descendent);
  const auto rec = induced_analysis(c.g, c.s, c.ord, p);
  REQUIRE(rec.induced_ia);
  CHECK(rec.induced_ia->str() == "{6,2;1,4}");
}

TEST_CASE("profile agrees with dense evaluation on random subsets") {
  std::mt19937_64 rng(3);
  for (auto g : {hamming(3, 2), johnson(6, 3)}) {
    const Ctx c(std::move(g));
    const DualWidthEvaluator eval(c.s, c.ord);
    for (int t = 0; t < 40; ++t) {
      const VertexSet y = random_subset(rng, c.g.size());
      const auto p = profile(c.g, c.s, c.ord, y);
      CHECK(std::pair{p.w, p.w_star} == dense_widths(c, y));
      const auto inner = inner_distribution(c.g, y);
      CHECK(eval(inner.data()) == p.w_star);
      CHECK(p.w + p.w_star >= c.s.d);
    }
  }
}

TEST_CASE("convexity, closure and covering radius") {
  const Ctx c(hamming(3, 2));
  const VertexSet antipodal{0, 7};
  CHECK(convex_hull(c.g, antipodal).size() == 8);
  CHECK_FALSE(is_convex(c.g, antipodal, Bitset::from_vector(8, antipodal)));
  const VertexSet edge{0, 1};
  const auto eb = Bitset::from_vector(8, edge);
  CHECK(is_convex(c.g, edge, eb));
  CHECK(is_strongly_closed(c.g, edge, eb));
  CHECK(completely_regular_radius(c.g, eb) == 2);
  CHECK(covering_radius(c.g, eb) == 2);
  // A path of length 2 is not completely regular in the cube.
  const VertexSet path{1, 0, 2};
  CHECK_FALSE(completely_regular_radius(c.g, Bitset::from_vector(8, path)));
  CHECK(normalize_vertex_set(c.g, {3, 1, 3}) == VertexSet{1, 3});
  CHECK_THROWS_AS(normalize_vertex_set(c.g, {9}), InvalidArgument);
}

TEST_CASE("exhaustive enumeration of Hamming cubes") {
  const Ctx c(hamming(3, 2));
  const auto r = enumerate_exhaustive(c.g, c.s, c.ord);
  CHECK(r.complete);
  CHECK(r.records.size() == 27);
  std::map<int, int> by_width;
  for (const auto& rec : r.records) ++by_width[rec.profile.w];
  CHECK(by_width == std::map<int, int>{{0, 8}, {1, 12}, {2, 6}, {3, 1}});
  CHECK(vertex_sets(r.records) == vertex_sets(enumerate_known_forms(c.g, c.s, c.ord).records));
  CHECK(vertex_sets(r.records) == vertex_sets(enumerate_search(c.g, c.s, c.ord).records));

  const Ctx c4(hamming(4, 2));
  EnumerationOptions threaded;
  threaded.threads = 3;
  const auto r4 = enumerate_exhaustive(c4.g, c4.s, c4.ord, threaded);
  CHECK(r4.records.size() == 81);
  std::vector<VertexSet> serial, parallel;
  for (const auto& rec : enumerate_exhaustive(c4.g, c4.s, c4.ord).records) serial.push_back(rec.profile.vertices);
  for (const auto& rec : r4.records) parallel.push_back(rec.profile.vertices);
  CHECK(serial == parallel);

  EnumerationOptions small;
  small.exhaustive_cap = 10;
  CHECK_THROWS_AS(enumerate_exhaustive(c4.g, c4.s, c4.ord, small), BudgetExceeded);
}

TEST_CASE("J(6,3) exhaustive equals the two classified shapes") {
  const Ctx c(johnson(6, 3));
  const auto r = enumerate_exhaustive(c.g, c.s, c.ord);
  CHECK(r.records.size() == 63);
  CHECK(vertex_sets(r.records) == vertex_sets(enumerate_known_forms(c.g, c.s, c.ord).records));
  int containing_point = 0, inside_five = 0;
  for (const auto& rec : r.records) {
    if (rec.profile.w != 2) continue;
    std::map<char, int> seen;
    for (int v : rec.profile.vertices)
      for (char ch : c.g.graph().labels[v])
        if (std::isdigit(static_cast<unsigned char>(ch))) ++seen[ch];
    containing_point += std::any_of(seen.begin(), seen.end(), [](auto& kv) { return kv.second == 10; });
    inside_five += seen.size() == 5;
  }
  CHECK(containing_point == 6);
  CHECK(inside_five == 6);
}

TEST_CASE("known forms of Doob and halved cube") {
  const Ctx doob_ctx(doob(1, 1));
  const auto d = enumerate_known_forms(doob_ctx.g, doob_ctx.s, doob_ctx.ord);
  // (16 singletons + whole Shrikhande) x (4 singletons + whole K_4).
  CHECK(d.records.size() == 17 * 5);
  std::map<std::pair<std::size_t, int>, int> shapes;
  for (const auto& rec : d.records) ++shapes[{rec.profile.vertices.size(), rec.profile.w}];
  CHECK(shapes == std::map<std::pair<std::size_t, int>, int>{{{1, 0}, 64}, {{4, 1}, 16}, {{16, 2}, 4}, {{64, 3}, 1}});
  CHECK(vertex_sets(d.records) == vertex_sets(enumerate_search(doob_ctx.g, doob_ctx.s, doob_ctx.ord).records));

  const Ctx hc(halved_cube(6));
  const auto h = enumerate_known_forms(hc.g, hc.s, hc.ord);
  std::map<std::pair<std::size_t, int>, int> hshapes;
  for (const auto& rec : h.records) ++hshapes[{rec.profile.vertices.size(), rec.profile.w}];
  CHECK(hshapes == std::map<std::pair<std::size_t, int>, int>{{{1, 0}, 32}, {{6, 1}, 32}, {{16, 2}, 12}, {{32, 3}, 1}});
  CHECK(vertex_sets(h.records) == vertex_sets(enumerate_search(hc.g, hc.s, hc.ord).records));
}

TEST_CASE("search respects its budget") {
  const Ctx c(halved_cube(6));
  EnumerationOptions tiny;
  tiny.budget = 5;
  const auto r = enumerate_search(c.g, c.s, c.ord, tiny);
  CHECK(r.budget_exhausted);
  CHECK_FALSE(r.complete);
  for (const auto& rec : r.records) CHECK(rec.profile.is_descendent);
}
