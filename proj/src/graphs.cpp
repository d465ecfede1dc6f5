#include "drgdesc/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>

#include "drgdesc/errors.hpp"
#include "drgdesc/exactmath.hpp"

namespace drg {

bool Graph::adjacent(int x, int y) const {
  const auto& n = adj[static_cast<std::size_t>(x)];
  return std::binary_search(n.begin(), n.end(), y);
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& n : adj) s += n.size();
  return s / 2;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (n <= 0) throw InvalidArgument("graph must have at least one vertex");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("label count does not match vertex count");
  Graph g;
  g.adj.assign(static_cast<std::size_t>(n), {});
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidArgument("edge endpoint out of range");
    if (x == y) throw InvalidArgument("loops are not allowed");
    g.adj[static_cast<std::size_t>(x)].push_back(y);
    g.adj[static_cast<std::size_t>(y)].push_back(x);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InvalidArgument("repeated edge");
  }
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  g.labels = std::move(labels);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.adj[static_cast<std::size_t>(x)])
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int v) { return v < 0; });
}

std::string IntersectionArray::str() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < diameter(); ++i) os << (i ? "," : "") << b[static_cast<std::size_t>(i)];
  os << ';';
  for (int i = 1; i <= diameter(); ++i) os << (i > 1 ? "," : "") << c[static_cast<std::size_t>(i)];
  os << '}';
  return os.str();
}

std::string FamilyTag::id() const {
  std::string s = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

std::string DistanceRegularGraph::id() const {
  if (tag_) return tag_->id();
  return "graph(n=" + std::to_string(size()) + ")";
}

DistanceRegularGraph DistanceRegularGraph::verify(Graph g, std::optional<FamilyTag> tag) {
  const int n = g.size();
  if (n == 0) throw InvalidArgument("empty graph");
  DistanceRegularGraph out;
  out.dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  int d = 0;
  for (int x = 0; x < n; ++x) {
    auto dx = bfs_distances(g, x);
    for (int y = 0; y < n; ++y) {
      int v = dx[static_cast<std::size_t>(y)];
      if (v < 0) throw NotDistanceRegular("graph is disconnected");
      if (v > 255) throw InvalidArgument("diameter above 255 is not supported");
      out.dist_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          static_cast<std::uint8_t>(v);
      d = std::max(d, v);
    }
  }
  std::vector<long> b(static_cast<std::size_t>(d) + 1, -1), c(static_cast<std::size_t>(d) + 1, -1);
  auto witness = [&](int x, int y, const char* what) {
    return NotDistanceRegular(std::string(what) + " not constant: witness pair (" + g.labels[static_cast<std::size_t>(x)] +
                              ", " + g.labels[static_cast<std::size_t>(y)] + ")");
  };
  for (int x = 0; x < n; ++x) {
    const std::uint8_t* row = out.dist_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(n);
    for (int y = 0; y < n; ++y) {
      int i = row[y];
      long cb = 0, cc = 0;
      for (int z : g.adj[static_cast<std::size_t>(y)]) {
        int dz = row[z];
        if (dz == i - 1) ++cc;
        else if (dz == i + 1) ++cb;
      }
      auto iu = static_cast<std::size_t>(i);
      if (b[iu] < 0) b[iu] = cb;
      else if (b[iu] != cb) throw witness(x, y, "b_i");
      if (c[iu] < 0) c[iu] = cc;
      else if (c[iu] != cc) throw witness(x, y, "c_i");
    }
  }
  out.ia_ = {b, c};
  out.graph_ = std::move(g);
  out.tag_ = std::move(tag);
  return out;
}

BuildOptions BuildOptions::from_environment() {
  BuildOptions opt;
  if (const char* env = std::getenv(kSizeBudgetEnv)) {
    try {
      long v = std::stol(env);
      if (v <= 0) throw InvalidArgument("size budget must be positive");
      opt.size_budget = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument(std::string(kSizeBudgetEnv) + " is not a positive integer");
    }
  }
  return opt;
}

// ------------------------------------------------------------ constructors

namespace {

void check_budget(const BigInt& count, const BuildOptions& opt, const std::string& what) {
  if (count > BigInt(static_cast<unsigned long>(opt.size_budget)))
    throw BudgetExceeded(what + " has " + count.get_str() + " vertices, above the size budget of " +
                         std::to_string(opt.size_budget));
}

BigInt big_pow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

BigInt big_binomial(long n, long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Graph graph_from_predicate(std::vector<std::string> labels, const std::function<bool(int, int)>& adjacent) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (adjacent(x, y)) edges.emplace_back(x, y);
  return Graph::from_edges(n, edges, std::move(labels));
}

std::string symbol(int v, int l) {
  if (l <= 10) return std::string(1, static_cast<char>('0' + v));
  return std::to_string(v);
}

}  // namespace

DistanceRegularGraph hamming(int d, int l, const BuildOptions& opt) {
  if (d < 1 || l < 2) throw InvalidArgument("hamming requires d >= 1 and l >= 2");
  check_budget(big_pow(l, d), opt, "H(" + std::to_string(d) + "," + std::to_string(l) + ")");
  const int n = static_cast<int>(big_pow(l, d).get_si());
  std::vector<std::vector<int>> words(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d)));
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    int c = v;
    for (int i = d - 1; i >= 0; --i) {
      words[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = c % l;
      c /= l;
    }
    std::string s;
    for (int i = 0; i < d; ++i) s += (l > 10 && i ? "," : "") + symbol(words[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)], l);
    labels.push_back(s);
  }
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    int diff = 0;
    for (int i = 0; i < d; ++i) diff += words[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] != words[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)];
    return diff == 1;
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"hamming", {d, l}});
}

DistanceRegularGraph johnson(int nu, int d, const BuildOptions& opt) {
  if (d < 1 || nu < 2 * d) throw InvalidArgument("johnson requires d >= 1 and nu >= 2d");
  check_budget(big_binomial(nu, d), opt, "J(" + std::to_string(nu) + "," + std::to_string(d) + ")");
  std::vector<std::uint64_t> sets;
  std::vector<std::string> labels;
  std::vector<int> comb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t m = 0;
    std::string s = "{";
    for (int i = 0; i < d; ++i) {
      m |= std::uint64_t{1} << comb[static_cast<std::size_t>(i)];
      s += (i ? "," : "") + std::to_string(comb[static_cast<std::size_t>(i)] + 1);
    }
    sets.push_back(m);
    labels.push_back(s + "}");
    int i = d - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == nu - d + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    return std::popcount(sets[static_cast<std::size_t>(x)] & sets[static_cast<std::size_t>(y)]) == d - 1;
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"johnson", {nu, d}});
}

DistanceRegularGraph doob(int d1, int d2, const BuildOptions& opt) {
  if (d1 < 0 || d2 < 0 || d1 + d2 < 1) throw InvalidArgument("doob requires d1, d2 >= 0 and d1 + d2 >= 1");
  BigInt count = big_pow(16, d1) * big_pow(4, d2);
  check_budget(count, opt, "Doob(" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  const int n = static_cast<int>(count.get_si());
  const int factors = d1 + d2;
  auto radix = [&](int f) { return f < d1 ? 16 : 4; };
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(factors)));
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    int c = v;
    for (int f = factors - 1; f >= 0; --f) {
      coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(f)] = c % radix(f);
      c /= radix(f);
    }
    std::string s;
    for (int f = 0; f < factors; ++f) {
      int x = coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(f)];
      if (f) s += '.';
      if (f < d1) s += "S" + std::to_string(x / 4) + std::to_string(x % 4);
      else s += "K" + std::to_string(x);
    }
    labels.push_back(s);
  }
  // Shrikhande: Cayley graph on Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
  auto shrikhande_adj = [](int u, int v) {
    int da = ((v / 4) - (u / 4) + 4) % 4, db = ((v % 4) - (u % 4) + 4) % 4;
    return (da == 1 && db == 0) || (da == 3 && db == 0) || (da == 0 && db == 1) || (da == 0 && db == 3) ||
           (da == 1 && db == 1) || (da == 3 && db == 3);
  };
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    int diff = -1;
    for (int f = 0; f < factors; ++f)
      if (coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(f)] != coords[static_cast<std::size_t>(y)][static_cast<std::size_t>(f)]) {
        if (diff >= 0) return false;
        diff = f;
      }
    if (diff < 0) return false;
    if (diff >= d1) return true;
    return shrikhande_adj(coords[static_cast<std::size_t>(x)][static_cast<std::size_t>(diff)], coords[static_cast<std::size_t>(y)][static_cast<std::size_t>(diff)]);
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"doob", {d1, d2}});
}

DistanceRegularGraph halved_cube(int n, const BuildOptions& opt) {
  if (n < 4 || n > 62) throw InvalidArgument("halved_cube requires 4 <= n");
  check_budget(big_pow(2, n - 1), opt, "halved " + std::to_string(n) + "-cube");
  std::vector<std::uint64_t> words;
  std::vector<std::string> labels;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (std::popcount(v) % 2) continue;
    words.push_back(v);
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back((v >> i) & 1U ? '1' : '0');
    labels.push_back(s);
  }
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    return std::popcount(words[static_cast<std::size_t>(x)] ^ words[static_cast<std::size_t>(y)]) == 2;
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"halved_cube", {n}});
}

std::vector<Subspace> grassmann_vertices(int q, int nu, int d) { return FieldSpace(q, nu).subspaces(d); }

DistanceRegularGraph grassmann(int q, int nu, int d, const BuildOptions& opt) {
  if (q != 2 && q != 3) throw InvalidArgument("grassmann supports q in {2,3}");
  if (d < 1 || nu < 2 * d) throw InvalidArgument("grassmann requires d >= 1 and nu >= 2d");
  const Rational count = qbinomial(nu, d, q);
  check_budget(count.num(), opt, "J_" + std::to_string(q) + "(" + std::to_string(nu) + "," + std::to_string(d) + ")");
  auto verts = grassmann_vertices(q, nu, d);
  std::vector<std::string> labels;
  for (const auto& s : verts) labels.push_back(FieldSpace::label(s));
  // dim(x ∩ y) = d - 1 iff the intersection has q^{d-1} vectors.
  std::size_t target = 1;
  for (int i = 0; i < d - 1; ++i) target *= static_cast<std::size_t>(q);
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    return verts[static_cast<std::size_t>(x)].elements.intersection_count(verts[static_cast<std::size_t>(y)].elements) == target;
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"grassmann", {q, nu, d}});
}

std::vector<Subspace> bilinear_vertices(int q, int d, int e) {
  FieldSpace space(q, d + e);
  std::vector<Subspace> out;
  const int cells = d * e;
  std::vector<int> m(static_cast<std::size_t>(cells), 0);
  while (true) {
    std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(d), std::vector<std::uint8_t>(static_cast<std::size_t>(d + e), 0));
    for (int i = 0; i < d; ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < e; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)] = static_cast<std::uint8_t>(m[static_cast<std::size_t>(i * e + j)]);
    }
    out.push_back(space.span(rows));
    int c = cells;
    while (c > 0 && ++m[static_cast<std::size_t>(c - 1)] == q) m[static_cast<std::size_t>(--c)] = 0;
    if (c == 0) break;
  }
  return out;
}

DistanceRegularGraph bilinear_forms(int q, int d, int e, const BuildOptions& opt) {
  if (q != 2 && q != 3) throw InvalidArgument("bilinear_forms supports q in {2,3}");
  if (d < 1 || e < d) throw InvalidArgument("bilinear_forms requires 1 <= d <= e");
  check_budget(big_pow(q, static_cast<long>(d) * e), opt,
               "Bil_" + std::to_string(q) + "(" + std::to_string(d) + "," + std::to_string(e) + ")");
  auto verts = bilinear_vertices(q, d, e);
  std::vector<std::string> labels;
  for (const auto& s : verts) {
    std::string lab;
    for (int i = 0; i < d; ++i) {
      if (i) lab.push_back('|');
      for (int j = 0; j < e; ++j) lab.push_back(static_cast<char>('0' + s.rref[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)]));
    }
    labels.push_back(lab);
  }
  std::size_t target = 1;
  for (int i = 0; i < d - 1; ++i) target *= static_cast<std::size_t>(q);
  auto g = graph_from_predicate(std::move(labels), [&](int x, int y) {
    return verts[static_cast<std::size_t>(x)].elements.intersection_count(verts[static_cast<std::size_t>(y)].elements) == target;
  });
  return DistanceRegularGraph::verify(std::move(g), FamilyTag{"bilinear_forms", {q, d, e}});
}

std::vector<std::string> family_names() {
  return {"hamming", "johnson", "doob", "halved_cube", "grassmann", "bilinear_forms"};
}

DistanceRegularGraph construct(const std::string& family, const std::vector<int>& p, const BuildOptions& opt) {
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw InvalidArgument(family + " expects " + std::to_string(k) + " parameters, got " + std::to_string(p.size()));
  };
  if (family == "hamming") return arity(2), hamming(p[0], p[1], opt);
  if (family == "johnson") return arity(2), johnson(p[0], p[1], opt);
  if (family == "doob") return arity(2), doob(p[0], p[1], opt);
  if (family == "halved_cube") return arity(1), halved_cube(p[0], opt);
  if (family == "grassmann") return arity(3), grassmann(p[0], p[1], p[2], opt);
  if (family == "bilinear_forms" || family == "bilinear") return arity(3), bilinear_forms(p[0], p[1], p[2], opt);
  throw InvalidArgument("unknown family '" + family + "'");
}

// --------------------------------------------------------------- utilities

Graph distance_k_graph(const DistanceRegularGraph& g, int k) {
  if (k < 0 || k > g.diameter()) throw InvalidArgument("distance_k_graph: k out of range");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y)
      if (g.dist(x, y) == k && k > 0) edges.emplace_back(x, y);
  return Graph::from_edges(g.size(), edges, g.graph().labels);
}

Graph induced_subgraph(const DistanceRegularGraph& g, const std::vector<int>& ys) {
  if (ys.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] < 0 || ys[i] >= g.size()) throw InvalidArgument("induced_subgraph: vertex out of range");
    labels.push_back(g.graph().labels[static_cast<std::size_t>(ys[i])]);
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (g.dist(ys[i], ys[j]) == 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Graph::from_edges(static_cast<int>(ys.size()), edges, std::move(labels));
}

Graph last_subconstituent(const DistanceRegularGraph& g, int x) {
  if (x < 0 || x >= g.size()) throw InvalidArgument("last_subconstituent: vertex out of range");
  std::vector<int> far;
  for (int y = 0; y < g.size(); ++y)
    if (g.dist(x, y) == g.diameter()) far.push_back(y);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < far.size(); ++i) {
    labels.push_back(g.graph().labels[static_cast<std::size_t>(far[i])]);
    for (std::size_t j = i + 1; j < far.size(); ++j)
      if (g.dist(far[i], far[j]) == 2) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Graph::from_edges(static_cast<int>(far.size()), edges, std::move(labels));
}

}  // namespace drg
