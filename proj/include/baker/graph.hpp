#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace baker {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Bad user input (unknown ids, malformed files, parameter violations).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally inconsistent data (broken rotation system, invalid decomposition).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph with stable non-negative integer vertex
/// ids and an optional apex set. Neighbor lists are kept sorted; all derived
/// iteration orders are deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph. Duplicate edges are merged, self-loops are rejected.
  static Graph from_edges(std::vector<int> vertices, const std::vector<Edge>& edges,
                          std::vector<int> apex_set = {});

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return m_; }
  const std::vector<int>& vertices() const { return ids_; }
  bool has_vertex(int v) const { return pos_.count(v) != 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[index_of(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  /// All edges as normalized pairs, sorted lexicographically.
  std::vector<Edge> edges() const;
  const std::vector<int>& apex_set() const { return apex_; }
  bool is_apex(int v) const;
  /// Position of v in vertices(); throws InputError for unknown ids.
  int index_of(int v) const;
  /// The graph induced on vertices() minus the apex set.
  Graph without_apices() const;

 private:
  std::vector<int> ids_;                 // sorted
  std::unordered_map<int, int> pos_;     // id -> index
  std::vector<std::vector<int>> adj_;    // per index, sorted neighbor ids
  std::vector<int> apex_;                // sorted subset of ids_
  int m_ = 0;
};

/// Result of contracting the connected components of an induced subgraph.
/// Quotient vertex ids are the minimum original id of their preimage, so
/// uncontracted vertices keep their id.
struct QuotientGraph {
  Graph graph;
  std::map<int, std::vector<int>> preimage;  // quotient id -> sorted original ids
  std::unordered_map<int, int> image;        // original id -> quotient id
  std::vector<int> contracted_set;           // sorted original ids that were contracted
};

/// Graph induced on s; vertex ids preserved. Unknown ids throw InputError.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Contracts each connected component of g[x] to a single vertex; drops the
/// loops and parallel edges this creates.
QuotientGraph contract(const Graph& g, const std::vector<int>& x);

/// Maximal connected vertex sets, each sorted, ordered by minimum id.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Two-coloring with the canonical orientation (minimum-id vertex of every
/// component gets color 0), or an odd-cycle witness.
struct Bipartition {
  std::optional<std::unordered_map<int, int>> coloring;  // vertex -> 0/1
  std::vector<int> odd_cycle;  // closed walk of odd length when not bipartite
  bool ok() const { return coloring.has_value(); }
  int color(int v) const { return coloring->at(v); }
};

Bipartition bipartition(const Graph& g);

}  // namespace baker
