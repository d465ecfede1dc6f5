#include "drgdesc/subsets.hpp"

#include <algorithm>
#include <limits>

#include "drgdesc/errors.hpp"
#include "drgdesc/leonard.hpp"
#include "drgdesc/parallel.hpp"

namespace drg {

std::vector<long long> inner_distribution(const DistanceRegularGraph& g, const VertexSet& y) {
  std::vector<long long> a(g.diameter() + 1, 0);
  for (int x : y) {
    const std::uint8_t* row = g.dist_row(x);
    for (int z : y) ++a[row[z]];
  }
  return a;
}

int dual_width(const SchemeData& s, const QPolyOrdering& ord, const std::vector<long long>& inner) {
  for (int i = s.d; i >= 0; --i) {
    Rational acc;
    for (int j = 0; j <= s.d; ++j)
      if (inner[j]) acc += s.Q(j, ord.perm[i]) * Rational(inner[j]);
    if (!acc.is_zero()) return i;
  }
  throw InternalError("Y^T E_0 Y vanished for a nonempty set");
}

DualWidthEvaluator::DualWidthEvaluator(const SchemeData& s, const QPolyOrdering& ord)
    : d_(s.d), coef_((s.d + 1) * (s.d + 1)) {
  for (int i = 0; i <= d_; ++i) {
    BigInt l = 1;
    for (int j = 0; j <= d_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.Q(j, ord.perm[i]).den().get_mpz_t());
    for (int j = 0; j <= d_; ++j) {
      BigInt v = s.Q(j, ord.perm[i]).num() * (l / s.Q(j, ord.perm[i]).den());
      if (!v.fits_slong_p()) throw InternalError("dual-width coefficients overflow machine integers");
      coef_[i * (d_ + 1) + j] = v.get_si();
    }
  }
}

int DualWidthEvaluator::operator()(const long long* inner) const {
  for (int i = d_; i >= 0; --i) {
    __int128 acc = 0;
    const __int128* row = coef_.data() + i * (d_ + 1);
    for (int j = 0; j <= d_; ++j) acc += row[j] * inner[j];
    if (acc != 0) return i;
  }
  throw InternalError("Y^T E_0 Y vanished for a nonempty set");
}

VertexSet normalize_vertex_set(const DistanceRegularGraph& g, VertexSet y) {
  if (y.empty()) throw InvalidArgument("vertex set must be nonempty");
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (y.front() < 0 || y.back() >= g.size()) throw InvalidArgument("vertex index out of range");
  return y;
}

int width(const DistanceRegularGraph& g, const VertexSet& y) {
  int w = 0;
  for (int x : y) {
    const std::uint8_t* row = g.dist_row(x);
    for (int z : y) w = std::max<int>(w, row[z]);
  }
  return w;
}

// A set is convex iff for all x, y in Y every neighbour of x one step closer
// to y lies in Y (induct along geodesics).
bool is_convex(const DistanceRegularGraph& g, const VertexSet& y, const Bitset& member) {
  for (int x : y)
    for (int t : y) {
      if (x == t) continue;
      const int dxt = g.dist(x, t);
      const std::uint8_t* row = g.dist_row(t);
      for (int z : g.graph().adj[x])
        if (row[z] == dxt - 1 && !member.test(z)) return false;
    }
  return true;
}

// Strong closure reduces to neighbours z of x with d(z,y) <= d(x,y) by the same
// induction.
bool is_strongly_closed(const DistanceRegularGraph& g, const VertexSet& y, const Bitset& member) {
  for (int x : y)
    for (int t : y) {
      if (x == t) continue;
      const int dxt = g.dist(x, t);
      const std::uint8_t* row = g.dist_row(t);
      for (int z : g.graph().adj[x])
        if (row[z] <= dxt && !member.test(z)) return false;
    }
  return true;
}

namespace {
std::vector<int> distance_to_set(const DistanceRegularGraph& g, const Bitset& member) {
  const int n = g.size();
  std::vector<int> dy(n, std::numeric_limits<int>::max());
  std::vector<int> ys = member.to_vector();
  for (int x = 0; x < n; ++x) {
    const std::uint8_t* row = g.dist_row(x);
    for (int y : ys) dy[x] = std::min<int>(dy[x], row[y]);
  }
  return dy;
}
}  // namespace

int covering_radius(const DistanceRegularGraph& g, const Bitset& member) {
  auto dy = distance_to_set(g, member);
  return *std::max_element(dy.begin(), dy.end());
}

// A*Y_i lies in span{Y_0..Y_rho} iff it is constant on every Y_j, since the
// characteristic vectors of the distance partition have disjoint supports.
std::optional<int> completely_regular_radius(const DistanceRegularGraph& g, const Bitset& member) {
  const int n = g.size();
  auto dy = distance_to_set(g, member);
  const int rho = *std::max_element(dy.begin(), dy.end());
  for (int i = 0; i <= rho; ++i) {
    std::vector<long> coef(rho + 1, -1);
    for (int x = 0; x < n; ++x) {
      long cnt = 0;
      for (int z : g.graph().adj[x]) cnt += dy[z] == i;
      long& c = coef[dy[x]];
      if (c < 0) c = cnt;
      else if (c != cnt) return std::nullopt;
    }
  }
  return rho;
}

VertexSet convex_hull(const DistanceRegularGraph& g, const VertexSet& y) {
  Bitset member(g.size());
  for (int v : y) member.set(v);
  VertexSet cur = y;
  bool grew = true;
  while (grew) {
    grew = false;
    VertexSet snapshot = cur;
    for (int x : snapshot)
      for (int t : snapshot) {
        if (x == t) continue;
        const int dxt = g.dist(x, t);
        const std::uint8_t* row = g.dist_row(t);
        for (int z : g.graph().adj[x])
          if (row[z] == dxt - 1 && !member.test(z)) {
            member.set(z);
            cur.push_back(z);
            grew = true;
          }
      }
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

SubsetProfile profile(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord, VertexSet y) {
  SubsetProfile p;
  p.vertices = normalize_vertex_set(g, std::move(y));
  Bitset member(g.size());
  for (int v : p.vertices) member.set(v);
  auto inner = inner_distribution(g, p.vertices);
  for (int j = 0; j <= s.d; ++j)
    if (inner[j]) p.w = j;
  p.w_star = dual_width(s, ord, inner);
  p.is_descendent = p.w + p.w_star == s.d;
  auto cr = completely_regular_radius(g, member);
  p.is_completely_regular = cr.has_value();
  p.rho = cr ? *cr : covering_radius(g, member);
  p.is_convex = is_convex(g, p.vertices, member);
  p.is_strongly_closed = is_strongly_closed(g, p.vertices, member);
  return p;
}

DescendentRecord induced_analysis(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering&,
                                  const SubsetProfile& p, const ParameterArray* parent_array) {
  if (!p.is_descendent) throw InvalidArgument("induced_analysis requires a descendent");
  DescendentRecord r;
  r.profile = p;
  Graph sub = induced_subgraph(g, p.vertices);
  r.induced_connected = is_connected(sub);
  if (r.induced_connected) r.induced_ia = DistanceRegularGraph::verify(std::move(sub)).intersection_array();
  if (parent_array) {
    if (p.w <= 1 || p.w == s.d) r.predicted_connected = true;  // point, clique or X
    else r.predicted_connected = predict_connectivity(*parent_array, p.w_star);
  }
  return r;
}

std::optional<QPolyOrdering> induced_ordering(const SchemeData& parent, const QPolyOrdering& ord, int y_dual_width,
                                              const SchemeData& sub) {
  const int w = sub.d;
  std::vector<int> perm(w + 1, -1);
  for (int j = 0; j <= w; ++j) {
    int top = -1;
    for (int i = 0; i <= parent.d; ++i) {
      // Eigenvalue of the restricted E_i on E'_j.
      Rational c;
      for (int k = 0; k <= w; ++k) c += parent.Q(k, ord.perm[i]) * sub.P(j, k);
      if (!c.is_zero()) top = i;
    }
    int pos = top - y_dual_width;
    if (pos < 0 || pos > w || perm[pos] >= 0) return std::nullopt;
    perm[pos] = j;
  }
  return make_ordering(sub, perm);
}

std::vector<TransitivityViolation> descendents_within(const DistanceRegularGraph& g, const SchemeData& s,
                                                      const QPolyOrdering& ord, const SubsetProfile& y,
                                                      const std::vector<VertexSet>& candidates) {
  if (!y.is_descendent) throw InvalidArgument("descendents_within requires a descendent");
  Graph sub = induced_subgraph(g, y.vertices);
  if (!is_connected(sub)) throw InvalidArgument("descendents_within requires a connected induced subgraph");
  auto gy = DistanceRegularGraph::verify(std::move(sub));
  auto sy = build_scheme(gy);
  std::vector<TransitivityViolation> out;
  auto oy = induced_ordering(s, ord, y.w_star, sy);
  if (!oy) {
    out.push_back({y.vertices, "no induced Q-polynomial ordering on Gamma_Y"});
    return out;
  }
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < y.vertices.size(); ++i) pos[y.vertices[i]] = static_cast<int>(i);
  DualWidthEvaluator dw(s, ord), dwy(sy, *oy);
  for (const auto& z : candidates) {
    if (z.empty() || std::any_of(z.begin(), z.end(), [&](int v) { return pos[v] < 0; })) continue;
    VertexSet zy;
    for (int v : z) zy.push_back(pos[v]);
    auto in_g = inner_distribution(g, z);
    auto in_y = inner_distribution(gy, zy);
    int wg = 0, wy = 0;
    for (int j = 0; j <= s.d; ++j)
      if (in_g[j]) wg = j;
    for (int j = 0; j <= sy.d; ++j)
      if (in_y[j]) wy = j;
    const int dg = dw(in_g.data()), dy = dwy(in_y.data());
    const bool desc_g = wg + dg == s.d, desc_y = wy + dy == sy.d;
    if (desc_g != desc_y)
      out.push_back({z, "descendent of Gamma: " + std::to_string(desc_g) + ", of Gamma_Y: " + std::to_string(desc_y)});
    else if (dg != dy + y.w_star)
      out.push_back({z, "dual width " + std::to_string(dg) + " in Gamma vs " + std::to_string(dy) + " + " +
                            std::to_string(y.w_star)});
  }
  return out;
}

std::vector<DescendentRecord> analyze_sets(const DistanceRegularGraph& g, const SchemeData& s,
                                           const QPolyOrdering& ord, const std::vector<TaggedSet>& sets,
                                           unsigned threads, const ParameterArray* parent_array) {
  std::vector<DescendentRecord> out(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) {
    auto p = profile(g, s, ord, sets[i].vertices);
    if (!p.is_descendent)
      throw InternalError("set from generator " + sets[i].generator + " is not a descendent");
    out[i] = induced_analysis(g, s, ord, p, parent_array);
    out[i].generator = sets[i].generator;
  });
  return out;
}

void sort_canonically(std::vector<DescendentRecord>& records) {
  std::sort(records.begin(), records.end(), [](const DescendentRecord& a, const DescendentRecord& b) {
    if (a.profile.w != b.profile.w) return a.profile.w < b.profile.w;
    return a.profile.vertices < b.profile.vertices;
  });
}

}  // namespace drg
