#include "drgdesc/qmatroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "drgdesc/errors.hpp"

namespace drg {

namespace {

// Vertex indices, abbreviated past 12 entries.
std::string set_str(const VertexSet& v) {
  constexpr std::size_t kShown = 12;
  std::string s = "{";
  for (std::size_t i = 0; i < v.size() && i < kShown; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  if (v.size() > kShown) s += ",... (" + std::to_string(v.size()) + " vertices)";
  return s + "}";
}

// Index of the unique element of `cand` with extreme rank that dominates all
// of `cand` via `reach`, if any.
std::optional<int> extreme(const DescendentPoset& p, const Bitset& cand, bool want_max,
                           const std::vector<Bitset>& reach) {
  int best = -1;
  cand.for_each([&](std::size_t i) {
    const int e = static_cast<int>(i);
    if (best < 0 || (want_max ? p.rank[e] > p.rank[best] : p.rank[e] < p.rank[best])) best = e;
  });
  if (best < 0 || !cand.is_subset_of(reach[best])) return std::nullopt;
  return best;
}

}  // namespace

bool DescendentPoset::covers(int b, int a) const {
  const auto& up = upper_covers[a];
  return std::find(up.begin(), up.end(), b) != up.end();
}

std::optional<int> DescendentPoset::meet(int a, int b) const {
  return extreme(*this, below[a] & below[b], true, below);
}

std::optional<int> DescendentPoset::join(int a, int b, const Bitset* within) const {
  Bitset u = above[a] & above[b];
  if (within) u &= *within;
  return extreme(*this, u, false, above);
}

DescendentPoset build_poset(const std::vector<DescendentRecord>& records, int vertex_count, int d) {
  DescendentPoset p;
  p.d = d;
  p.vertex_count = vertex_count;
  std::vector<std::pair<int, VertexSet>> keyed;
  for (const auto& r : records) keyed.emplace_back(r.profile.w_star, r.profile.vertices);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].second == keyed[i - 1].second)
      throw InvalidArgument("duplicate poset element " + set_str(keyed[i].second));
  const int m = static_cast<int>(keyed.size());
  for (auto& [r, v] : keyed) {
    p.rank.push_back(r);
    p.sets.push_back(Bitset::from_vector(vertex_count, v));
    p.elements.push_back(std::move(v));
  }
  p.below.assign(m, Bitset(m));
  p.above.assign(m, Bitset(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.sets[b].is_subset_of(p.sets[a])) {  // a <= b
        p.above[a].set(b);
        p.below[b].set(a);
      }
  p.upper_covers.assign(m, {});
  p.lower_covers.assign(m, {});
  for (int a = 0; a < m; ++a)
    p.above[a].for_each([&](std::size_t bi) {
      const int b = static_cast<int>(bi);
      if (b != a && p.above[a].intersection_count(p.below[b]) == 2) {
        p.upper_covers[a].push_back(b);
        p.lower_covers[b].push_back(a);
      }
    });
  for (int a = 0; a < m; ++a)
    if (static_cast<int>(p.above[a].count()) == m) p.bottom = a;
  return p;
}

void check_axioms(const DescendentPoset& p, QuantumMatroidReport& rep) {
  const int m = static_cast<int>(p.size());
  auto fail = [&](const std::string& what) { rep.witnesses.push_back(what); };

  // QM1: rank(0) = 0 and every cover raises w* by one.
  rep.qm1 = p.bottom.has_value() && p.rank[*p.bottom] == 0;
  if (!p.bottom) fail("QM1: no minimum element");
  for (int a = 0; a < m && rep.qm1; ++a)
    for (int b : p.upper_covers[a])
      if (p.rank[b] != p.rank[a] + 1) {
        rep.qm1 = false;
        fail("QM1: " + set_str(p.elements[b]) + " covers " + set_str(p.elements[a]) + " but w* goes " +
             std::to_string(p.rank[a]) + " -> " + std::to_string(p.rank[b]));
        break;
      }

  // QM2: all meets exist.
  rep.qm2 = true;
  for (int a = 0; a < m && rep.qm2; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!p.meet(a, b)) {
        rep.qm2 = false;
        fail("QM2: no meet of " + set_str(p.elements[a]) + " and " + set_str(p.elements[b]));
        break;
      }

  // QM3: each [0,x] is a lattice, modular by the rank identity, and atomic.
  Bitset atoms(m);
  if (p.bottom)
    for (int a : p.upper_covers[*p.bottom]) atoms.set(a);
  rep.qm3 = p.bottom.has_value();
  for (int x = 0; x < m && rep.qm3; ++x) {
    const Bitset& interval = p.below[x];
    const auto members = interval.to_vector();
    for (std::size_t i = 0; i < members.size() && rep.qm3; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int u = members[i], v = members[j];
        auto lo = p.meet(u, v);
        auto hi = p.join(u, v, &interval);
        if (!lo || !hi) {
          rep.qm3 = false;
          fail("QM3: [0," + set_str(p.elements[x]) + "] is not a lattice at " + set_str(p.elements[u]) + ", " +
               set_str(p.elements[v]));
          break;
        }
        if (p.rank[u] + p.rank[v] != p.rank[*lo] + p.rank[*hi]) {
          rep.qm3 = false;
          fail("QM3: [0," + set_str(p.elements[x]) + "] is not modular at " + set_str(p.elements[u]) + ", " +
               set_str(p.elements[v]));
          break;
        }
      }
    for (int y : members) {
      if (!rep.qm3) break;
      int acc = *p.bottom;
      bool ok = true;
      (p.below[y] & atoms).for_each([&](std::size_t a) {
        if (!ok) return;
        auto j = p.join(acc, static_cast<int>(a), &interval);
        if (j) acc = *j;
        else ok = false;
      });
      if (!ok || acc != y) {
        rep.qm3 = false;
        fail("QM3: " + set_str(p.elements[y]) + " is not a join of atoms");
      }
    }
  }

  // QM4: atom exchange.
  std::vector<Bitset> joinable(m, Bitset(m));
  for (int x = 0; x < m; ++x)
    atoms.for_each([&](std::size_t a) {
      if (p.join(x, static_cast<int>(a))) joinable[x].set(a);
    });
  rep.qm4 = true;
  for (int x = 0; x < m && rep.qm4; ++x)
    for (int y = 0; y < m; ++y) {
      if (p.rank[x] >= p.rank[y]) continue;
      bool found = false;
      (p.below[y] & atoms & joinable[x]).for_each([&](std::size_t a) { found = found || !p.le(static_cast<int>(a), x); });
      if (!found) {
        rep.qm4 = false;
        fail("QM4: no exchange atom for x=" + set_str(p.elements[x]) + ", y=" + set_str(p.elements[y]));
        break;
      }
    }

  // Regularity.
  const int d = p.d;
  auto constant = [&](const std::vector<long>& vals, const std::string& name) -> std::optional<long> {
    if (vals.empty()) {
      fail(name + ": no elements to count");
      return std::nullopt;
    }
    if (std::adjacent_find(vals.begin(), vals.end(), std::not_equal_to<>()) != vals.end()) {
      auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
      fail(name + ": counts range over " + std::to_string(*lo) + ".." + std::to_string(*hi));
      return std::nullopt;
    }
    return vals.front() - 1;
  };
  std::vector<long> line, dual_line, zigzag;
  for (int a = 0; a < m; ++a) {
    if (p.rank[a] == 2) line.push_back(static_cast<long>(p.lower_covers[a].size()));
    if (p.rank[a] == d - 1) dual_line.push_back(static_cast<long>(p.upper_covers[a].size()));
  }
  for (int x = 0; x < m; ++x) {
    if (p.rank[x] != d - 1) continue;
    for (int y = 0; y < m; ++y) {
      if (p.rank[y] != d) continue;
      auto xy = p.meet(x, y);
      if (!xy || !p.covers(x, *xy)) continue;
      long count = 0;
      for (int x1 : p.lower_covers[y])
        for (int y1 : p.upper_covers[x1])
          if (p.covers(y1, x)) ++count;
      zigzag.push_back(count);
    }
  }
  rep.line_regular_q = constant(line, "line regularity");
  rep.dual_line_regular_beta = constant(dual_line, "dual-line regularity");
  rep.zigzag_regular_alpha = constant(zigzag, "zig-zag regularity");
}

void check_ud_and_counts(const DistanceRegularGraph& g, const DescendentPoset& p, std::optional<long> q,
                         QuantumMatroidReport& rep) {
  const int n = g.size(), d = p.d;
  // counts[(x*n + y)*(d+1) + w] for x <= y
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(n) * n * (d + 1), 0);
  for (std::size_t e = 0; e < p.size(); ++e) {
    const auto& ys = p.elements[e];
    const int w = d - p.rank[e];
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = i; j < ys.size(); ++j)
        ++counts[(static_cast<std::size_t>(ys[i]) * n + ys[j]) * (d + 1) + w];
  }
  rep.ud_property.assign(d + 1, true);
  bool counts_ok = true;
  std::vector<bool> ud_reported(d + 1, false);
  bool count_reported = false;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int i = g.dist(x, y);
      const std::uint32_t* c = &counts[(static_cast<std::size_t>(x) * n + y) * (d + 1)];
      if (c[i] != 1) {
        rep.ud_property[i] = false;
        if (!ud_reported[i]) {
          ud_reported[i] = true;
          rep.witnesses.push_back("UD_" + std::to_string(i) + ": vertices " + g.graph().labels[x] + " and " +
                                  g.graph().labels[y] + " lie in " + std::to_string(c[i]) +
                                  " descendents of width " + std::to_string(i));
        }
      }
      if (!q) continue;
      for (int j = i; j <= d; ++j) {
        const Rational want = qbinomial(d - i, j - i, *q);
        if (Rational(static_cast<long>(c[j])) != want) {
          counts_ok = false;
          if (!count_reported) {
            count_reported = true;
            rep.witnesses.push_back("pair counts: vertices " + g.graph().labels[x] + " and " + g.graph().labels[y] +
                                    " at distance " + std::to_string(i) + " lie in " + std::to_string(c[j]) +
                                    " descendents of width " + std::to_string(j) + ", expected " + want.pretty());
          }
        }
      }
    }
  if (q) rep.pair_counts_ok = counts_ok;
  else rep.pair_counts_ok.reset();
}

void check_intersection_closure(const DescendentPoset& p, QuantumMatroidReport& rep) {
  std::unordered_set<Bitset, BitsetHash> members(p.sets.begin(), p.sets.end());
  rep.intersection_closed = true;
  const std::size_t m = p.size();
  for (std::size_t a = 0; a < m && rep.intersection_closed; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Bitset c = p.sets[a] & p.sets[b];
      if (c.none() || members.count(c)) continue;
      rep.intersection_closed = false;
      rep.witnesses.push_back("intersection: " + set_str(p.elements[a]) + " and " + set_str(p.elements[b]) +
                              " meet in " + set_str(c.to_vector()) + ", which is not a member");
      break;
    }
}

}  // namespace drg
