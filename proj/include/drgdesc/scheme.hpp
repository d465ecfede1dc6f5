// Bose-Mesner data of a distance-regular graph.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgdesc/classical.hpp"
#include "drgdesc/exactmath.hpp"
#include "drgdesc/graphs.hpp"

namespace drg {

struct QPolyOrdering {
  std::vector<int> perm;                   // perm[i] = eigenvalue index of E_i; perm[0] = 0
  std::vector<Rational> dual_eigenvalues;  // theta*_0..theta*_d
  std::vector<Rational> a_star, b_star, c_star;
};

// Idempotents are kept in the distance basis: E_i = |X|^{-1} sum_j Q(j,i) A_j.
// Dense |X| x |X| matrices are only built on request.
struct SchemeData {
  int d = 0;
  long vertex_count = 0;
  IntersectionArray ia;
  std::vector<Rational> eigenvalues;  // descending; eigenvalues[0] = valency
  std::vector<long> multiplicities;
  std::vector<long> valencies;  // k_j = |Gamma_j(x)|
  ExactMatrix P;                // P(i,j) = v_j(theta_i)
  ExactMatrix Q;                // Q(j,i) = m_i v_j(theta_i) / k_j
  std::vector<Rational> krein;  // q^k_{ij} at ((i*(d+1))+j)*(d+1)+k
  std::vector<QPolyOrdering> qpoly_orderings;

  const Rational& krein_at(int i, int j, int k) const { return krein[(i * (d + 1) + j) * (d + 1) + k]; }
};

SchemeData build_scheme(const DistanceRegularGraph& g);
SchemeData build_scheme(const IntersectionArray& ia);

// Admissible orderings in lexicographic order of perm.
std::vector<QPolyOrdering> find_qpoly_orderings(const SchemeData& s);
// Dual data for perm, or nullopt if perm is not a Q-polynomial ordering.
std::optional<QPolyOrdering> make_ordering(const SchemeData& s, const std::vector<int>& perm);

QPolyOrdering standard_ordering_for_classical(const SchemeData& s, const ClassicalParameters& cp);
// Standard ordering if cp is given and fits, else the first admissible one.
QPolyOrdering preferred_ordering(const SchemeData& s, const std::optional<ClassicalParameters>& cp);

ExactMatrix distance_matrix(const DistanceRegularGraph& g, int i);
ExactMatrix idempotent_matrix(const DistanceRegularGraph& g, const SchemeData& s, int i);

// Algebra-level identities always; dense matrix identities when |X| <= dense_limit.
// Returns human-readable failures (empty when everything holds).
std::vector<std::string> check_scheme(const DistanceRegularGraph& g, const SchemeData& s,
                                      int dense_limit);

}  // namespace drg
