// Width, dual width and descendent analysis of vertex subsets.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drgdesc/bitset.hpp"
#include "drgdesc/graphs.hpp"
#include "drgdesc/scheme.hpp"

namespace drg {

struct ParameterArray;

using VertexSet = std::vector<int>;  // sorted, distinct

struct SubsetProfile {
  VertexSet vertices;
  int w = 0;
  int w_star = 0;
  int rho = 0;
  bool is_descendent = false;
  bool is_convex = false;
  bool is_completely_regular = false;
  bool is_strongly_closed = false;
};

struct DescendentRecord {
  SubsetProfile profile;
  bool induced_connected = false;
  std::optional<IntersectionArray> induced_ia;
  std::optional<bool> predicted_connected;  // from the parent's parameter array
  std::string generator;
};

// Number of ordered pairs of Y at each distance 0..d.
std::vector<long long> inner_distribution(const DistanceRegularGraph& g, const VertexSet& y);

// Exact dual width from an inner distribution:  Y^T E_i Y = |X|^{-1} sum_j Q(j,i) a_j.
int dual_width(const SchemeData& s, const QPolyOrdering& ord, const std::vector<long long>& inner);

// Integer-scaled version of dual_width for enumeration inner loops.
class DualWidthEvaluator {
 public:
  DualWidthEvaluator(const SchemeData& s, const QPolyOrdering& ord);
  int operator()(const long long* inner) const;

 private:
  int d_;
  std::vector<__int128> coef_;  // (d+1) x (d+1), row = ordering position
};

VertexSet normalize_vertex_set(const DistanceRegularGraph& g, VertexSet y);
int width(const DistanceRegularGraph& g, const VertexSet& y);
bool is_convex(const DistanceRegularGraph& g, const VertexSet& y, const Bitset& member);
bool is_strongly_closed(const DistanceRegularGraph& g, const VertexSet& y, const Bitset& member);
// Covering radius when the distance partition is equitable, nullopt otherwise.
std::optional<int> completely_regular_radius(const DistanceRegularGraph& g, const Bitset& member);
int covering_radius(const DistanceRegularGraph& g, const Bitset& member);
VertexSet convex_hull(const DistanceRegularGraph& g, const VertexSet& y);

SubsetProfile profile(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                      VertexSet y);

// Connectivity and intersection array of the induced subgraph of a descendent.
DescendentRecord induced_analysis(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                  const SubsetProfile& p, const ParameterArray* parent_array = nullptr);

// Q-polynomial ordering of Gamma_Y induced from the parent's ordering:
// the restriction of E_{w*+i} to Y lies in <E'_i..E'_w> with a nonzero E'_i
// coefficient.
std::optional<QPolyOrdering> induced_ordering(const SchemeData& parent, const QPolyOrdering& ord, int y_dual_width,
                                              const SchemeData& sub);

struct TransitivityViolation {
  VertexSet z;
  std::string detail;
};

// For each candidate Z inside Y: Z is a descendent of Gamma_Y iff of Gamma, and
// w*(Z in Gamma) = w*(Z in Gamma_Y) + w*(Y).
std::vector<TransitivityViolation> descendents_within(const DistanceRegularGraph& g, const SchemeData& s,
                                                      const QPolyOrdering& ord, const SubsetProfile& y,
                                                      const std::vector<VertexSet>& candidates);

// ----------------------------------------------------------------- enumeration

struct EnumerationOptions {
  int exhaustive_cap = 20;
  std::size_t budget = 1'000'000;  // closure operations for the search enumerator
  unsigned threads = 1;
  const ParameterArray* parent_array = nullptr;  // enables connectivity prediction
};

struct EnumerationResult {
  std::vector<DescendentRecord> records;  // canonical order: (w, vertices)
  std::string mode;                       // exhaustive | known | search
  bool complete = false;                  // only exhaustive claims completeness
  bool budget_exhausted = false;
  std::size_t operations = 0;
};

void sort_canonically(std::vector<DescendentRecord>& records);

EnumerationResult enumerate_exhaustive(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                       const EnumerationOptions& opt = {});
EnumerationResult enumerate_known_forms(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                        const EnumerationOptions& opt = {});
EnumerationResult enumerate_search(const DistanceRegularGraph& g, const SchemeData& s, const QPolyOrdering& ord,
                                   const EnumerationOptions& opt = {});

// Known-form vertex sets with their generator tags, before profiling.
struct TaggedSet {
  VertexSet vertices;
  std::string generator;
  int expected_width = 0;
};
std::vector<TaggedSet> known_form_sets(const DistanceRegularGraph& g);

// Profiles and analyses each set in parallel; output order follows input order.
std::vector<DescendentRecord> analyze_sets(const DistanceRegularGraph& g, const SchemeData& s,
                                           const QPolyOrdering& ord, const std::vector<TaggedSet>& sets,
                                           unsigned threads, const ParameterArray* parent_array = nullptr);

}  // namespace drg
