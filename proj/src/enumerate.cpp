// Descendent enumerators: exhaustive, classified forms, and grow-and-close search.
#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "drgdesc/errors.hpp"
#include "drgdesc/parallel.hpp"
#include "drgdesc/subsets.hpp"

namespace drg {

namespace {

std::vector<TaggedSet> dedupe(std::vector<TaggedSet> sets) {
  std::set<VertexSet> seen;
  std::vector<TaggedSet> out;
  for (auto& t : sets) {
    std::sort(t.vertices.begin(), t.vertices.end());
    if (seen.insert(t.vertices).second) out.push_back(std::move(t));
  }
  return out;
}

EnumerationResult finish(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                         const std::vector<TaggedSet>& sets, const EnumerationOptions& opt, std::string mode) {
  EnumerationResult r;
  r.records = analyze_sets(g, s, ord, sets, opt.threads, opt.parent_array);
  sort_canonically(r.records);
  r.mode = std::move(mode);
  return r;
}

}  // namespace

// ------------------------------------------------------------ exhaustive

EnumerationResult enumerate_exhaustive(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                       const EnumerationOptions& opt) {
  const int n = g.size();
  if (n > opt.exhaustive_cap)
    throw BudgetExceeded("exhaustive enumeration is capped at " + std::to_string(opt.exhaustive_cap) +
                         " vertices; graph has " + std::to_string(n));
  const int d = s.d;
  const DualWidthEvaluator dw(s, ord);
  // Shard by the membership pattern of the first `prefix` vertices.
  const int prefix = std::min(n, 8);
  const std::size_t tasks = std::size_t{1} << prefix;
  std::vector<std::vector<VertexSet>> found(tasks);

  parallel_for(tasks, opt.threads, [&](std::size_t task) {
    std::vector<int> cur;
    std::vector<long long> cnt(d + 1, 0);
    auto add = [&](int v) {
      const std::uint8_t* row = g.dist_row(v);
      for (int u : cur) cnt[row[u]] += 2;
      cnt[0] += 1;
      cur.push_back(v);
    };
    auto remove_last = [&] {
      int v = cur.back();
      cur.pop_back();
      const std::uint8_t* row = g.dist_row(v);
      for (int u : cur) cnt[row[u]] -= 2;
      cnt[0] -= 1;
    };
    auto test = [&] {
      int w = d;
      while (cnt[w] == 0) --w;
      if (w + dw(cnt.data()) == d) found[task].push_back(cur);
    };
    for (int i = 0; i < prefix; ++i)
      if ((task >> i) & 1U) add(i);
    if (!cur.empty()) test();
    std::function<void(int)> dfs = [&](int start) {
      for (int v = start; v < n; ++v) {
        add(v);
        test();
        dfs(v + 1);
        remove_last();
      }
    };
    dfs(prefix);
  });

  std::vector<TaggedSet> sets;
  for (auto& f : found)
    for (auto& y : f) sets.push_back({std::move(y), "exhaustive", 0});
  auto r = finish(g, s, ord, dedupe(std::move(sets)), opt, "exhaustive");
  r.complete = true;
  r.operations = (std::size_t{1} << n) - 1;
  return r;
}

// ----------------------------------------------------------- known forms

namespace {

void add_trivial(const DistanceRegularGraph& g, std::vector<TaggedSet>& out) {
  for (int x = 0; x < g.size(); ++x) out.push_back({{x}, "known-form:trivial-singleton", 0});
  VertexSet all(g.size());
  for (int x = 0; x < g.size(); ++x) all[x] = x;
  out.push_back({all, "known-form:trivial-whole", g.diameter()});
}

std::vector<int> digits(int v, int radix, int len) {
  std::vector<int> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = v % radix;
    v /= radix;
  }
  return out;
}

void hamming_forms(const DistanceRegularGraph& g, int d, int l, std::vector<TaggedSet>& out) {
  std::vector<std::vector<int>> words;
  for (int v = 0; v < g.size(); ++v) words.push_back(digits(v, l, d));
  for (unsigned mask = 0; mask < (1U << d); ++mask) {
    const int k = std::popcount(mask);
    int combos = 1;
    for (int i = 0; i < k; ++i) combos *= l;
    for (int a = 0; a < combos; ++a) {
      auto vals = digits(a, l, k);
      TaggedSet t{{}, "known-form:hamming-u-subset-x", d - k};
      for (int v = 0; v < g.size(); ++v) {
        bool ok = true;
        for (int i = 0, j = 0; i < d && ok; ++i)
          if ((mask >> i) & 1U) ok = words[v][i] == vals[j++];
        if (ok) t.vertices.push_back(v);
      }
      out.push_back(std::move(t));
    }
  }
}

void johnson_forms(const DistanceRegularGraph& g, int nu, int d, std::vector<TaggedSet>& out) {
  // Recover each vertex's subset from its label "{a,b,c}".
  std::vector<std::uint64_t> sets;
  for (const auto& lab : g.graph().labels) {
    std::uint64_t m = 0;
    std::size_t i = 1;
    while (i < lab.size()) {
      std::size_t j = lab.find_first_of(",}", i);
      m |= std::uint64_t{1} << (std::stoi(lab.substr(i, j - i)) - 1);
      i = j + 1;
    }
    sets.push_back(m);
  }
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << nu); ++u) {
    const int k = std::popcount(u);
    if (k <= d) {
      TaggedSet t{{}, "known-form:johnson-u-subset-x", d - k};
      for (int v = 0; v < g.size(); ++v)
        if ((sets[v] & u) == u) t.vertices.push_back(v);
      out.push_back(std::move(t));
    }
    if (nu == 2 * d && k >= d) {
      TaggedSet t{{}, "known-form:johnson-x-subset-u", k - d};
      for (int v = 0; v < g.size(); ++v)
        if ((sets[v] & u) == sets[v]) t.vertices.push_back(v);
      out.push_back(std::move(t));
    }
  }
}

void subspace_forms(const DistanceRegularGraph& g, const std::vector<Subspace>& verts, const FieldSpace& space,
                    int d, bool dual_forms, const Bitset* avoid, const std::string& family,
                    std::vector<TaggedSet>& out) {
  const int n = space.n();
  for (int k = 0; k <= d; ++k)
    for (const auto& u : space.subspaces(k)) {
      if (avoid && u.elements.intersection_count(*avoid) != 1) continue;
      TaggedSet t{{}, "known-form:" + family + "-u-subset-x", d - k};
      for (int v = 0; v < g.size(); ++v)
        if (u.elements.is_subset_of(verts[v].elements)) t.vertices.push_back(v);
      out.push_back(std::move(t));
    }
  if (!dual_forms) return;
  for (int k = d; k <= n; ++k) {
    const int w = k - d;
    for (const auto& u : space.subspaces(k)) {
      if (avoid && space.dim_of_count(u.elements.intersection_count(*avoid)) != w) continue;
      TaggedSet t{{}, "known-form:" + family + "-x-subset-u", w};
      for (int v = 0; v < g.size(); ++v)
        if (verts[v].elements.is_subset_of(u.elements)) t.vertices.push_back(v);
      if (!t.vertices.empty()) out.push_back(std::move(t));
    }
  }
}

void doob_forms(const DistanceRegularGraph& g, int d1, int d2, std::vector<TaggedSet>& out) {
  const int factors = d1 + d2;
  auto radix = [&](int f) { return f < d1 ? 16 : 4; };
  std::vector<std::vector<int>> coords(g.size(), std::vector<int>(factors));
  for (int v = 0; v < g.size(); ++v) {
    int c = v;
    for (int f = factors - 1; f >= 0; --f) {
      coords[v][f] = c % radix(f);
      c /= radix(f);
    }
  }
  // choice[f] == radix(f) means the full factor.
  std::vector<int> choice(factors, 0);
  while (true) {
    int w = 0;
    for (int f = 0; f < factors; ++f)
      if (choice[f] == radix(f)) w += f < d1 ? 2 : 1;
    TaggedSet t{{}, "known-form:doob-product", w};
    for (int v = 0; v < g.size(); ++v) {
      bool ok = true;
      for (int f = 0; f < factors && ok; ++f) ok = choice[f] == radix(f) || coords[v][f] == choice[f];
      if (ok) t.vertices.push_back(v);
    }
    out.push_back(std::move(t));
    int f = factors;
    while (f > 0 && ++choice[f - 1] > radix(f - 1)) choice[--f] = 0;
    if (f == 0) break;
  }
}

void halved_cube_forms(const DistanceRegularGraph& g, int n, std::vector<TaggedSet>& out) {
  if (n % 2) return;
  const int d = n / 2;
  std::vector<std::uint64_t> words;
  for (const auto& lab : g.graph().labels) words.push_back(std::stoull(lab, nullptr, 2));
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    if (std::popcount(z) % 2 == 0) continue;
    TaggedSet t{{}, "known-form:halved-cube-neighbourhood", 1};
    for (int v = 0; v < g.size(); ++v)
      if (std::popcount(words[v] ^ z) == 1) t.vertices.push_back(v);
    out.push_back(std::move(t));
  }
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a) {
      TaggedSet t{{}, "known-form:halved-cube-coordinate", d - 1};
      for (int v = 0; v < g.size(); ++v)
        if (static_cast<int>((words[v] >> (n - 1 - i)) & 1U) == a) t.vertices.push_back(v);
      out.push_back(std::move(t));
    }
}

}  // namespace

std::vector<TaggedSet> known_form_sets(const DistanceRegularGraph& g) {
  if (!g.family()) throw InvalidArgument("known forms require a family-tagged graph");
  const auto& tag = *g.family();
  const auto& p = tag.params;
  std::vector<TaggedSet> out;
  add_trivial(g, out);
  if (tag.family == "hamming") {
    hamming_forms(g, p[0], p[1], out);
  } else if (tag.family == "johnson") {
    johnson_forms(g, p[0], p[1], out);
  } else if (tag.family == "grassmann") {
    FieldSpace space(p[0], p[1]);
    subspace_forms(g, grassmann_vertices(p[0], p[1], p[2]), space, p[2], p[1] == 2 * p[2], nullptr, "grassmann", out);
  } else if (tag.family == "bilinear_forms") {
    const int q = p[0], d = p[1], e = p[2];
    FieldSpace space(q, d + e);
    std::vector<std::vector<std::uint8_t>> rows;
    for (int j = 0; j < e; ++j) {
      std::vector<std::uint8_t> r(d + e, 0);
      r[d + j] = 1;
      rows.push_back(r);
    }
    Bitset e_space = space.span(rows).elements;
    subspace_forms(g, bilinear_vertices(q, d, e), space, d, d == e, &e_space, "bilinear", out);
  } else if (tag.family == "doob") {
    doob_forms(g, p[0], p[1], out);
  } else if (tag.family == "halved_cube") {
    halved_cube_forms(g, p[0], out);
  } else {
    throw InvalidArgument("no classified forms for family " + tag.family);
  }
  return dedupe(std::move(out));
}

EnumerationResult enumerate_known_forms(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                        const EnumerationOptions& opt) {
  auto sets = known_form_sets(g);
  auto r = finish(g, s, ord, sets, opt, "known");
  std::map<VertexSet, int> expected;
  for (const auto& t : sets) expected[t.vertices] = t.expected_width;
  for (const auto& rec : r.records)
    if (rec.profile.w != expected[rec.profile.vertices])
      throw InternalError("classified form from " + rec.generator + " has width " + std::to_string(rec.profile.w) +
                          ", expected " + std::to_string(expected[rec.profile.vertices]));
  r.operations = sets.size();
  return r;
}

// ---------------------------------------------------------------- search

namespace {

// Bron-Kerbosch with pivoting over bitsets.  emit returns false to stop.
bool maximal_cliques(const std::vector<Bitset>& nbr, const Bitset& r, Bitset p, Bitset x,
                     const std::function<bool(const Bitset&)>& emit) {
  if (p.none() && x.none()) return emit(r);
  int pivot = -1;
  std::size_t best = 0;
  (p | x).for_each([&](std::size_t u) {
    std::size_t c = p.intersection_count(nbr[u]);
    if (pivot < 0 || c > best) {
      pivot = static_cast<int>(u);
      best = c;
    }
  });
  std::vector<int> cand;
  p.for_each([&](std::size_t v) {
    if (!nbr[pivot].test(v)) cand.push_back(static_cast<int>(v));
  });
  for (int v : cand) {
    Bitset r2 = r;
    r2.set(v);
    if (!maximal_cliques(nbr, r2, p & nbr[v], x & nbr[v], emit)) return false;
    p.reset(v);
    x.set(v);
  }
  return true;
}

}  // namespace

EnumerationResult enumerate_search(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                   const EnumerationOptions& opt) {
  const int n = g.size();
  const int d = s.d;
  const DualWidthEvaluator dw(s, ord);
  EnumerationResult res;
  res.mode = "search";
  std::set<VertexSet> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  std::size_t ops = 0;
  bool exhausted = false;

  auto width_of = [&](const VertexSet& y) { return width(g, y); };
  auto test = [&](const VertexSet& y) {
    auto inner = inner_distribution(g, y);
    int w = d;
    while (inner[w] == 0) --w;
    if (w + dw(inner.data()) == d) found.insert(y);
  };
  auto tick = [&] {
    if (++ops > opt.budget) exhausted = true;
    return !exhausted;
  };

  for (int x = 0; x < n; ++x) test({x});
  {
    VertexSet all(n);
    for (int x = 0; x < n; ++x) all[x] = x;
    test(all);
  }

  // (a) maximal cliques.
  std::vector<Bitset> nbr(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y : g.graph().adj[x]) nbr[x].set(y);
  Bitset everyone(n);
  for (int x = 0; x < n; ++x) everyone.set(x);
  maximal_cliques(nbr, Bitset(n), everyone, Bitset(n), [&](const Bitset& c) {
    if (!tick()) return false;
    test(c.to_vector());
    return true;
  });

  // (b) pair hulls, then grow by one vertex at a time keeping the width.
  for (int x = 0; x < n && !exhausted; ++x)
    for (int y = x + 1; y < n && !exhausted; ++y) {
      if (!tick()) break;
      VertexSet h = convex_hull(g, {x, y});
      Bitset hb = Bitset::from_vector(n, h);
      if (!seen.insert(hb).second) continue;
      std::vector<VertexSet> stack{h};
      while (!stack.empty() && !exhausted) {
        VertexSet cur = std::move(stack.back());
        stack.pop_back();
        test(cur);
        const int w = width_of(cur);
        Bitset mem = Bitset::from_vector(n, cur);
        for (int v = 0; v < n && !exhausted; ++v) {
          if (mem.test(v)) continue;
          const std::uint8_t* row = g.dist_row(v);
          bool fits = true;
          for (int u : cur) fits = fits && row[u] <= w;
          if (!fits) continue;
          if (!tick()) break;
          VertexSet grown = cur;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), v), v);
          grown = convex_hull(g, grown);
          if (width_of(grown) != w) continue;
          if (seen.insert(Bitset::from_vector(n, grown)).second) stack.push_back(std::move(grown));
        }
      }
    }

  std::vector<TaggedSet> sets;
  for (const auto& y : found) sets.push_back({y, "search", 0});
  res.records = analyze_sets(g, s, ord, sets, opt.threads, opt.parent_array);
  sort_canonically(res.records);
  res.budget_exhausted = exhausted;
  res.operations = std::min(ops, opt.budget);
  return res;
}

}  // namespace drg
