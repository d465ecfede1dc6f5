// Whole-graph verification: runs every theorem check on one graph and
// collects the outcomes in a report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drgdesc/leonard.hpp"
#include "drgdesc/qmatroid.hpp"
#include "drgdesc/scheme.hpp"
#include "drgdesc/subsets.hpp"

namespace drg {

// Scheme, ordering, classical parameters and Leonard array of one graph.
struct GraphAnalysis {
  DistanceRegularGraph graph;
  SchemeData scheme;
  std::optional<QPolyOrdering> ordering;  // standard when classical, else first admissible
  std::optional<ClassicalParameters> classical;
  std::optional<ParameterArray> array;
};

GraphAnalysis analyze_graph(DistanceRegularGraph g);

struct VerifyOptions {
  unsigned threads = 1;
  std::string mode = "auto";  // auto | exhaustive | known | search
  int exhaustive_cap = 20;
  std::size_t budget = 1'000'000;
  int search_limit = 128;     // cross-check known forms by search up to this many vertices
  int samples = 1000;         // random subsets for the fundamental inequality
  int affine_trials = 100;
  int dense_limit = 64;       // dense idempotent identities up to this many vertices
  std::size_t poset_limit = 3000;
  int ud_limit = 1500;
  std::uint64_t seed = 20100101;
};

// Descendents in the requested mode; "auto" picks exhaustive when the graph
// is small enough, then known forms for family graphs, then search.
EnumerationResult run_enumeration(const GraphAnalysis& a, const VerifyOptions& opt, const std::string& mode);

struct CheckResult {
  std::string name;
  std::string anchor;  // verbatim phrase of the statement being checked
  std::string status;  // pass | fail | skipped
  std::string witness;
  double seconds = 0;
};

struct VerificationReport {
  std::string graph_id;
  IntersectionArray ia;
  std::optional<ClassicalParameters> classical;
  std::optional<ParameterArray> array;
  std::string enumeration_mode;
  bool enumeration_complete = false;
  std::vector<DescendentRecord> descendents;
  std::vector<CheckResult> checks;
  std::optional<QuantumMatroidReport> qmatroid;
  std::string qmatroid_family;  // "all descendents" or the subfamily examined

  bool ok() const;
};

VerificationReport verify_all(DistanceRegularGraph g, const VerifyOptions& opt = {});

// Graphs covered by the acceptance suite.
std::vector<FamilyTag> shipped_catalog();

// Descendents of the classified "u in x" shape plus the trivial ones, for
// families that also have the dual "x in u" shape.
std::vector<DescendentRecord> upward_subfamily(const DistanceRegularGraph& g,
                                               const std::vector<DescendentRecord>& records);

// UD / pair-count expectation for the full descendent family, if the family
// is one whose behaviour is classified.
std::optional<bool> expected_full_family_ud(const FamilyTag& tag);

}  // namespace drg
