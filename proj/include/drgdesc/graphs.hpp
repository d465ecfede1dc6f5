// Graph containers, distance-regularity verification and family constructors.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgdesc/finite_field.hpp"

namespace drg {

struct Graph {
  std::vector<std::vector<int>> adj;  // sorted neighbour lists
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(adj.size()); }
  bool adjacent(int x, int y) const;
  std::size_t edge_count() const;

  // Validates simplicity; labels default to vertex indices.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});
};

std::vector<int> bfs_distances(const Graph& g, int source);  // -1 when unreachable
bool is_connected(const Graph& g);

struct IntersectionArray {
  std::vector<long> b;  // b_0..b_d with b_d = 0
  std::vector<long> c;  // c_0..c_d with c_0 = 0

  int diameter() const { return static_cast<int>(b.size()) - 1; }
  long a(int i) const { return b[0] - b[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)]; }
  std::string str() const;  // "{b_0,..,b_{d-1};c_1,..,c_d}"
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct FamilyTag {
  std::string family;
  std::vector<int> params;
  std::string id() const;  // e.g. "hamming(3,2)"
};

class DistanceRegularGraph {
 public:
  // Exhaustively checks that every pair at distance i sees the same b_i, c_i.
  // Throws NotDistanceRegular with a witness pair otherwise.
  static DistanceRegularGraph verify(Graph g, std::optional<FamilyTag> tag = std::nullopt);

  const Graph& graph() const { return graph_; }
  int size() const { return graph_.size(); }
  int diameter() const { return ia_.diameter(); }
  int dist(int x, int y) const {
    return dist_[static_cast<std::size_t>(x) * static_cast<std::size_t>(graph_.size()) + static_cast<std::size_t>(y)];
  }
  const std::uint8_t* dist_row(int x) const {
    return dist_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(graph_.size());
  }
  const IntersectionArray& intersection_array() const { return ia_; }
  long valency() const { return ia_.b[0]; }
  const std::optional<FamilyTag>& family() const { return tag_; }
  std::string id() const;

 private:
  Graph graph_;
  std::vector<std::uint8_t> dist_;
  IntersectionArray ia_;
  std::optional<FamilyTag> tag_;
};

constexpr std::size_t kDefaultSizeBudget = 4096;
constexpr const char* kSizeBudgetEnv = "DRGDESC_SIZE_BUDGET";

struct BuildOptions {
  std::size_t size_budget = kDefaultSizeBudget;
  // Budget from the environment override, falling back to the default.
  static BuildOptions from_environment();
};

DistanceRegularGraph hamming(int d, int l, const BuildOptions& opt = {});
DistanceRegularGraph johnson(int nu, int d, const BuildOptions& opt = {});
DistanceRegularGraph doob(int d1, int d2, const BuildOptions& opt = {});
DistanceRegularGraph halved_cube(int n, const BuildOptions& opt = {});
DistanceRegularGraph grassmann(int q, int nu, int d, const BuildOptions& opt = {});
DistanceRegularGraph bilinear_forms(int q, int d, int e, const BuildOptions& opt = {});
// Dispatch by family name; validates arity.
DistanceRegularGraph construct(const std::string& family, const std::vector<int>& params,
                               const BuildOptions& opt = {});
std::vector<std::string> family_names();

// Vertex subspaces in constructor order (bilinear forms: row spaces of [I | M]).
std::vector<Subspace> grassmann_vertices(int q, int nu, int d);
std::vector<Subspace> bilinear_vertices(int q, int d, int e);

Graph distance_k_graph(const DistanceRegularGraph& g, int k);
Graph induced_subgraph(const DistanceRegularGraph& g, const std::vector<int>& ys);
Graph last_subconstituent(const DistanceRegularGraph& g, int x);

}  // namespace drg
