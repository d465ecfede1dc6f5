#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "drgdesc/errors.hpp"
#include "drgdesc/scheme.hpp"

using namespace drg;

namespace {

// Perm is Q-polynomial iff, with F_i the idempotents in that order,
// F_1 o F_i lies in span(F_{i-1}, F_i, F_{i+1}) with nonzero F_{i+1} part.
// Coefficients come from trace(M F_k) / trace(F_k) on dense matrices.
bool dense_qpoly_oracle(const DistanceRegularGraph& g, const SchemeData& s, const std::vector<int>& perm) {
  std::vector<ExactMatrix> f;
  for (int i : perm) f.push_back(idempotent_matrix(g, s, i));
  const int d = s.d;
  for (int i = 0; i <= d; ++i) {
    const ExactMatrix m = entrywise_product(f[1], f[i]);
    for (int k = 0; k <= d; ++k) {
      const Rational coef = trace(matmul(m, f[k])) / trace(f[k]);
      if (std::abs(k - i) > 1 && !coef.is_zero()) return false;
      if (k == i + 1 && coef.is_zero()) return false;
    }
  }
  return true;
}

std::vector<int> identity_perm(int d) {
  std::vector<int> p(d + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("H(3,2) spectrum") {
  const auto g = hamming(3, 2);
  const auto s = build_scheme(g);
  CHECK(s.eigenvalues == std::vector<Rational>{3, 1, -1, -3});
  CHECK(s.multiplicities == std::vector<long>{1, 3, 3, 1});
  CHECK(s.valencies == std::vector<long>{1, 3, 3, 1});
  // Oracle: nullity of A - theta I on the 8x8 adjacency matrix.
  const ExactMatrix a = distance_matrix(g, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto m = matsub(a, scale(ExactMatrix::identity(8), s.eigenvalues[i]));
    CHECK(8 - static_cast<long>(rank(m)) == s.multiplicities[i]);
  }
}

TEST_CASE("J(6,3) spectrum") {
  const auto s = build_scheme(johnson(6, 3));
  CHECK(s.d == 3);
  CHECK(s.eigenvalues[0] == 9);
  CHECK(s.eigenvalues == std::vector<Rational>{9, 3, -1, -3});
  CHECK(s.multiplicities == std::vector<long>{1, 5, 9, 5});
}

TEST_CASE("scheme identities hold densely on small graphs") {
  for (const auto& g : {hamming(3, 2), johnson(6, 3), halved_cube(6), hamming(2, 3), doob(1, 0)}) {
    CAPTURE(g.id());
    const auto s = build_scheme(g);
    CHECK(check_scheme(g, s, 64).empty());
    ExactMatrix sum(g.size(), g.size());
    for (int i = 0; i <= s.d; ++i) sum = matadd(sum, idempotent_matrix(g, s, i));
    CHECK(sum == ExactMatrix::identity(g.size()));
    CHECK(idempotent_matrix(g, s, 0) == scale(ExactMatrix::ones(g.size(), g.size()), Rational(1) / g.size()));
    for (const auto& k : s.krein) CHECK(k.sign() >= 0);
    CHECK(matmul(s.P, s.Q) == scale(ExactMatrix::identity(s.d + 1), Rational(g.size())));
  }
}

TEST_CASE("Q-polynomial orderings agree with the dense oracle") {
  for (const auto& g : {hamming(3, 2), johnson(6, 3), halved_cube(6)}) {
    CAPTURE(g.id());
    const auto s = build_scheme(g);
    std::vector<std::vector<int>> oracle;
    std::vector<int> rest{1, 2, 3};
    do {
      std::vector<int> perm{0};
      perm.insert(perm.end(), rest.begin(), rest.end());
      if (dense_qpoly_oracle(g, s, perm)) oracle.push_back(perm);
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::vector<std::vector<int>> found;
    for (const auto& o : s.qpoly_orderings) found.push_back(o.perm);
    CHECK(found == oracle);
    CHECK(std::find(found.begin(), found.end(), identity_perm(3)) != found.end());
  }
  CHECK(build_scheme(hamming(3, 2)).qpoly_orderings.size() == 1);
}

TEST_CASE("standard ordering for classical parameters") {
  const auto h = build_scheme(hamming(4, 2));
  const auto o = standard_ordering_for_classical(h, {4, 1, 0, 1});
  CHECK(o.perm == identity_perm(4));
  for (int i = 0; i + 2 <= 4; ++i)
    CHECK(o.dual_eigenvalues[i] - o.dual_eigenvalues[i + 1] ==
          o.dual_eigenvalues[i + 1] - o.dual_eigenvalues[i + 2]);
  CHECK(o.dual_eigenvalues[0] == h.multiplicities[1]);

  CHECK(standard_ordering_for_classical(build_scheme(johnson(6, 3)), {3, 1, 1, 3}).perm == identity_perm(3));
  CHECK(standard_ordering_for_classical(build_scheme(doob(1, 1)), {3, 1, 0, 3}).perm == identity_perm(3));
}

TEST_CASE("dual intersection numbers of H(3,2)") {
  const auto s = build_scheme(hamming(3, 2));
  const auto& o = s.qpoly_orderings.front();
  // H(3,2) is self-dual: b*_i, c*_i equal b_i, c_i.
  CHECK(o.b_star == std::vector<Rational>{3, 2, 1, 0});
  CHECK(o.c_star == std::vector<Rational>{0, 1, 2, 3});
  CHECK(o.dual_eigenvalues == std::vector<Rational>{3, 1, -1, -3});
}

TEST_CASE("non-integral spectrum is rejected") {
  // Pentagon: eigenvalues (-1 +- sqrt 5)/2.
  CHECK_THROWS_AS(build_scheme(IntersectionArray{{2, 1, 0}, {0, 1, 1}}), NonIntegralSpectrum);
  CHECK_FALSE(make_ordering(build_scheme(hamming(3, 2)), {0, 2, 1, 3}));
}
