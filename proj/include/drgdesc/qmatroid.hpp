// Descendent families as posets under reverse inclusion, and the
// quantum-matroid axioms with their regularity parameters.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgdesc/bitset.hpp"
#include "drgdesc/classical.hpp"
#include "drgdesc/subsets.hpp"

namespace drg {

// Y <= Z iff Z is a subset of Y; rank(Y) = w*(Y).  Elements are sorted by
// (rank, vertices).
struct DescendentPoset {
  int d = 0;
  int vertex_count = 0;
  std::vector<VertexSet> elements;
  std::vector<Bitset> sets;   // vertex bitsets
  std::vector<int> rank;
  std::vector<Bitset> below;  // below[a] = {b : b <= a}, a included
  std::vector<Bitset> above;  // above[a] = {b : a <= b}, a included
  std::vector<std::vector<int>> upper_covers;
  std::vector<std::vector<int>> lower_covers;
  std::optional<int> bottom;  // the minimum, when one exists

  std::size_t size() const { return elements.size(); }
  bool le(int a, int b) const { return above[a].test(b); }
  bool covers(int b, int a) const;  // b covers a
  std::optional<int> meet(int a, int b) const;
  // Least upper bound among the elements of `within` (all of P when null).
  std::optional<int> join(int a, int b, const Bitset* within = nullptr) const;
};

// Throws InvalidArgument on duplicate elements.
DescendentPoset build_poset(const std::vector<DescendentRecord>& records, int vertex_count, int d);

struct QuantumMatroidReport {
  bool qm1 = false, qm2 = false, qm3 = false, qm4 = false;
  std::optional<long> line_regular_q;
  std::optional<long> dual_line_regular_beta;
  std::optional<long> zigzag_regular_alpha;
  std::vector<bool> ud_property;        // index i = distance
  std::optional<bool> pair_counts_ok;   // needs a classical q
  bool intersection_closed = false;
  std::vector<std::string> witnesses;   // one line per failed property
};

// Fills qm1..qm4 and the regularity parameters.
void check_axioms(const DescendentPoset& p, QuantumMatroidReport& report);

// (UD)_i for every i, and when q is given the counts
// |{Y : x, y in Y, w(Y) = j}| = [d-i choose j-i]_q for pairs at distance i <= j.
void check_ud_and_counts(const DistanceRegularGraph& g, const DescendentPoset& p, std::optional<long> q,
                         QuantumMatroidReport& report);

// Every nonempty pairwise intersection of members is a member.
void check_intersection_closure(const DescendentPoset& p, QuantumMatroidReport& report);

}  // namespace drg
