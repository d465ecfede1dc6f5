#include "drgdesc/scheme.hpp"

#include <algorithm>
#include <numeric>

#include "drgdesc/errors.hpp"

namespace drg {

namespace {

// det(xI - T) for the tridiagonal intersection matrix T.
IntPolynomial characteristic_polynomial(const IntersectionArray& ia) {
  const int d = ia.diameter();
  IntPolynomial prev{{BigInt(1)}};
  IntPolynomial cur{{BigInt(-ia.a(0)), BigInt(1)}};
  for (int i = 1; i <= d; ++i) {
    IntPolynomial lin{{BigInt(-ia.a(i)), BigInt(1)}};
    IntPolynomial tail{{BigInt(ia.b[i - 1]) * ia.c[i]}};
    IntPolynomial next = poly_sub(poly_mul(lin, cur), poly_mul(tail, prev));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// v_0(x)..v_d(x) via c_{j+1} v_{j+1} = (x - a_j) v_j - b_{j-1} v_{j-1}.
std::vector<Rational> distance_polynomials(const IntersectionArray& ia, const Rational& x) {
  const int d = ia.diameter();
  std::vector<Rational> v(d + 1);
  v[0] = 1;
  if (d >= 1) v[1] = x;
  for (int j = 1; j < d; ++j)
    v[j + 1] = ((x - Rational(ia.a(j))) * v[j] - Rational(ia.b[j - 1]) * v[j - 1]) / Rational(ia.c[j + 1]);
  return v;
}

}  // namespace

SchemeData build_scheme(const DistanceRegularGraph& g) {
  SchemeData s = build_scheme(g.intersection_array());
  if (s.vertex_count != g.size())
    throw InternalError("vertex count from valencies disagrees with the graph");
  return s;
}

SchemeData build_scheme(const IntersectionArray& ia) {
  SchemeData s;
  s.d = ia.diameter();
  s.ia = ia;
  const int d = s.d;
  for (int i = 1; i <= d; ++i)
    if (ia.b[i - 1] <= 0 || ia.c[i] <= 0) throw NotDistanceRegular("ill-defined intersection numbers");

  auto roots = integer_roots(characteristic_polynomial(ia));
  int found = 0;
  for (const auto& r : roots) found += r.multiplicity;
  if (found != d + 1 || static_cast<int>(roots.size()) != d + 1)
    throw NonIntegralSpectrum("intersection matrix of " + ia.str() + " has non-integral eigenvalues");
  for (const auto& r : roots) s.eigenvalues.push_back(Rational(r.root));
  if (s.eigenvalues[0] != Rational(ia.b[0])) throw InternalError("largest eigenvalue differs from the valency");

  const auto kv = distance_polynomials(ia, Rational(ia.b[0]));
  long n = 0;
  for (const auto& k : kv) {
    s.valencies.push_back(k.to_long());
    n += k.to_long();
  }
  s.vertex_count = n;

  s.P = ExactMatrix(d + 1, d + 1);
  s.Q = ExactMatrix(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    auto v = distance_polynomials(ia, s.eigenvalues[i]);
    Rational norm;
    for (int j = 0; j <= d; ++j) {
      s.P(i, j) = v[j];
      norm += v[j] * v[j] / Rational(s.valencies[j]);
    }
    Rational m = Rational(n) / norm;
    if (!m.is_integer() || m.sign() <= 0)
      throw NonIntegralSpectrum("multiplicity " + m.str() + " is not a positive integer");
    s.multiplicities.push_back(m.to_long());
    for (int j = 0; j <= d; ++j) s.Q(j, i) = m * v[j] / Rational(s.valencies[j]);
  }

  // q^k_{ij} = (1/|X|) sum_l Q(l,i) Q(l,j) P(k,l).
  s.krein.assign((d + 1) * (d + 1) * (d + 1), Rational(0));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        Rational acc;
        for (int l = 0; l <= d; ++l) acc += s.Q(l, i) * s.Q(l, j) * s.P(k, l);
        s.krein[(i * (d + 1) + j) * (d + 1) + k] = acc / Rational(n);
      }
  s.qpoly_orderings = find_qpoly_orderings(s);
  return s;
}

std::optional<QPolyOrdering> make_ordering(const SchemeData& s, const std::vector<int>& perm) {
  const int d = s.d;
  if (static_cast<int>(perm.size()) != d + 1 || perm[0] != 0) return std::nullopt;
  {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= d; ++i)
      if (sorted[i] != i) return std::nullopt;
  }
  if (d == 0) return QPolyOrdering{perm, {s.Q(0, 0)}, {Rational(0)}, {Rational(0)}, {Rational(0)}};
  const int e1 = perm[1];
  for (int i = 0; i <= d; ++i)
    for (int k = 0; k <= d; ++k) {
      const Rational& v = s.krein_at(e1, perm[i], perm[k]);
      int gap = std::abs(k - i);
      if (gap > 1 && !v.is_zero()) return std::nullopt;
      if (gap == 1 && v.is_zero()) return std::nullopt;
    }
  QPolyOrdering o;
  o.perm = perm;
  o.a_star.assign(d + 1, Rational(0));
  o.b_star.assign(d + 1, Rational(0));
  o.c_star.assign(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    o.dual_eigenvalues.push_back(s.Q(i, e1));
    o.a_star[i] = s.krein_at(e1, perm[i], perm[i]);
    if (i < d) o.b_star[i] = s.krein_at(e1, perm[i + 1], perm[i]);
    if (i > 0) o.c_star[i] = s.krein_at(e1, perm[i - 1], perm[i]);
  }
  return o;
}

std::vector<QPolyOrdering> find_qpoly_orderings(const SchemeData& s) {
  std::vector<int> perm(s.d + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<QPolyOrdering> out;
  do {
    if (auto o = make_ordering(s, perm)) out.push_back(std::move(*o));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

QPolyOrdering standard_ordering_for_classical(const SchemeData& s, const ClassicalParameters& cp) {
  const int d = s.d;
  for (const auto& o : s.qpoly_orderings) {
    if (d == 0) return o;
    const auto& th = o.dual_eigenvalues;
    // theta*_i - theta*_d = xi* [d-i]_q with xi* = theta*_{d-1} - theta*_d.
    const Rational xi = th[d - 1] - th[d];
    if (xi.is_zero()) continue;
    bool fits = true;
    for (int i = 0; i <= d && fits; ++i) fits = th[i] - th[d] == xi * qint(d - i, cp.q);
    if (fits) return o;
  }
  throw InvalidArgument("no Q-polynomial ordering is standard for " + cp.str());
}

QPolyOrdering preferred_ordering(const SchemeData& s, const std::optional<ClassicalParameters>& cp) {
  if (s.qpoly_orderings.empty()) throw InvalidArgument("scheme is not Q-polynomial");
  if (cp) {
    try {
      return standard_ordering_for_classical(s, *cp);
    } catch (const InvalidArgument&) {
    }
  }
  return s.qpoly_orderings.front();
}

ExactMatrix distance_matrix(const DistanceRegularGraph& g, int i) {
  const int n = g.size();
  ExactMatrix a(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.dist(x, y) == i) a(x, y) = 1;
  return a;
}

ExactMatrix idempotent_matrix(const DistanceRegularGraph& g, const SchemeData& s, int i) {
  const int n = g.size();
  std::vector<Rational> coef(s.d + 1);
  for (int j = 0; j <= s.d; ++j) coef[j] = s.Q(j, i) / Rational(n);
  ExactMatrix e(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) e(x, y) = coef[g.dist(x, y)];
  return e;
}

std::vector<std::string> check_scheme(const DistanceRegularGraph& g, const SchemeData& s, int dense_limit) {
  std::vector<std::string> fails;
  const int d = s.d;
  const long n = s.vertex_count;
  if (matmul(s.P, s.Q) != scale(ExactMatrix::identity(d + 1), Rational(n))) fails.push_back("P*Q != |X| I");
  if (std::accumulate(s.multiplicities.begin(), s.multiplicities.end(), 0L) != n)
    fails.push_back("multiplicities do not sum to |X|");
  for (const auto& k : s.krein)
    if (k.sign() < 0) {
      fails.push_back("negative Krein parameter " + k.str());
      break;
    }
  // Three-term recurrence on eigenvalue rows: theta v_j = b_{j-1} v_{j-1} + a_j v_j + c_{j+1} v_{j+1}.
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      Rational rhs = Rational(s.ia.a(j)) * s.P(i, j);
      if (j > 0) rhs += Rational(s.ia.b[j - 1]) * s.P(i, j - 1);
      if (j < d) rhs += Rational(s.ia.c[j + 1]) * s.P(i, j + 1);
      if (rhs != s.eigenvalues[i] * s.P(i, j)) fails.push_back("three-term recurrence fails on P");
    }
  if (g.size() > dense_limit) return fails;

  std::vector<ExactMatrix> A, E;
  for (int i = 0; i <= d; ++i) {
    A.push_back(distance_matrix(g, i));
    E.push_back(idempotent_matrix(g, s, i));
  }
  if (A[0] != ExactMatrix::identity(n)) fails.push_back("A_0 != I");
  ExactMatrix sumA(n, n), sumE(n, n);
  for (int i = 0; i <= d; ++i) {
    sumA = matadd(sumA, A[i]);
    sumE = matadd(sumE, E[i]);
  }
  if (sumA != ExactMatrix::ones(n, n)) fails.push_back("sum A_i != J");
  if (sumE != ExactMatrix::identity(n)) fails.push_back("sum E_i != I");
  if (E[0] != scale(ExactMatrix::ones(n, n), Rational(1) / Rational(n))) fails.push_back("E_0 != J/|X|");
  for (int i = 0; i <= d; ++i) {
    if (trace(E[i]) != Rational(s.multiplicities[i])) fails.push_back("trace E_i != m_i");
    for (int j = i; j <= d; ++j) {
      ExactMatrix prod = matmul(E[i], E[j]);
      if (i == j ? prod != E[i] : !prod.is_zero())
        fails.push_back("E_" + std::to_string(i) + " E_" + std::to_string(j) + " wrong");
    }
    // A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}.
    if (d >= 1) {
      ExactMatrix rhs = scale(A[i], Rational(s.ia.a(i)));
      if (i > 0) rhs = matadd(rhs, scale(A[i - 1], Rational(s.ia.b[i - 1])));
      if (i < d) rhs = matadd(rhs, scale(A[i + 1], Rational(s.ia.c[i + 1])));
      if (matmul(A[1], A[i]) != rhs) fails.push_back("A_1 A_" + std::to_string(i) + " recurrence fails");
    }
  }
  for (const auto& o : s.qpoly_orderings) {
    if (d == 0) break;
    const ExactMatrix& e1 = E[o.perm[1]];
    for (int i = 0; i <= d; ++i) {
      ExactMatrix rhs = scale(E[o.perm[i]], o.a_star[i]);
      if (i > 0) rhs = matadd(rhs, scale(E[o.perm[i - 1]], o.b_star[i - 1]));
      if (i < d) rhs = matadd(rhs, scale(E[o.perm[i + 1]], o.c_star[i + 1]));
      rhs = scale(rhs, Rational(1) / Rational(n));
      if (entrywise_product(e1, E[o.perm[i]]) != rhs) fails.push_back("E_1 o E_i recurrence fails");
    }
    ExactMatrix sum(n, n);
    for (int i = 0; i <= d; ++i) sum = matadd(sum, scale(A[i], o.dual_eigenvalues[i]));
    if (scale(e1, Rational(n)) != sum) fails.push_back("|X| E_1 != sum theta*_i A_i");
  }
  return fails;
}

}  // namespace drg
