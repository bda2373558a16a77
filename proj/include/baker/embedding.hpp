#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "baker/graph.hpp"

namespace baker {

/// Directed edge tail -> head.
using DirEdge = std::pair<int, int>;

struct NonPlanarError : StructureError {
  using StructureError::StructureError;
};

/// Face of a combinatorial embedding. `marked` flags faces that stand in for
/// vortex attachments: their layers are skipped when residues are chosen.
struct Face {
  int id = 0;
  std::vector<int> boundary_vertices;  // sorted, deduped
  std::vector<DirEdge> walk;           // closed boundary walk; each directed edge once
  bool marked = false;
};

/// Combinatorial genus-0 embedding of a connected graph: rotation system,
/// traced face list, designated outer face. Immutable except for face marks
/// and the outer-face choice.
class Embedding {
 public:
  /// Traces faces from the rotation and checks Euler's formula. `rotation`
  /// must give, for every vertex, a cyclic permutation of its neighbors.
  static Embedding from_rotation(Graph g, std::map<int, std::vector<int>> rotation,
                                 std::optional<int> outer = std::nullopt);

  const Graph& graph() const { return g_; }
  const std::map<int, std::vector<int>>& rotation() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int outer_face() const { return outer_; }
  void set_outer_face(int id);
  void set_marked_faces(const std::vector<int>& ids);
  std::vector<int> marked_faces() const;
  int num_marked_faces() const;
  /// Face ids incident to v, ascending.
  const std::vector<int>& faces_at(int v) const;
  /// The face whose boundary walk contains the directed edge u->v.
  int face_of_dir_edge(int u, int v) const;

 private:
  Graph g_;
  std::map<int, std::vector<int>> rot_;
  std::vector<Face> faces_;
  int outer_ = 0;
  std::map<DirEdge, int> face_of_dir_;
  std::map<int, std::vector<int>> faces_at_;
};

/// Traces the boundary walks of the rotation system. Faces are numbered in
/// trace order, starting each walk from the smallest unused directed edge.
/// Throws StructureError if the rotation is not a neighbor permutation.
std::vector<Face> faces_from_rotation(const Graph& g,
                                      const std::map<int, std::vector<int>>& rotation);

/// Planarity test + embedding (blockwise Demoucron). Throws NonPlanarError.
Embedding embed_planar(const Graph& g);

/// Node of the vertex-face incidence graph.
struct VfiNode {
  bool is_face = false;
  int id = 0;
};

/// Bipartite incidence graph between the vertices and faces of an embedding.
/// Nodes are indexed compactly: vertices first (in id order), then faces.
class VfiGraph {
 public:
  explicit VfiGraph(const Embedding& e);

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int num_vertex_nodes() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<int>& adj(int idx) const { return adj_[idx]; }
  VfiNode node_at(int idx) const;
  int index_of(const VfiNode& n) const;
  bool connected() const;

 private:
  std::vector<int> vertex_ids_;
  int num_faces_ = 0;
  std::unordered_map<int, int> vertex_index_;
  std::vector<std::vector<int>> adj_;
};

VfiGraph build_vfi(const Embedding& e);

/// Vertex-face distance: path length plus the weights of every face on the
/// path, endpoints included. With no weights this is plain BFS distance. Note
/// that the weighted distance from a face to itself is its own weight.
long long vfi_distance(const VfiGraph& vfi, const VfiNode& a, const VfiNode& b,
                       const std::map<int, long long>* face_weights = nullptr);

/// Faces of the embedding restricted to the induced subgraph on s, obtained
/// by merging faces of the full embedding across every edge not present in
/// the subgraph. Handles disconnected subgraphs (a region may enclose several
/// boundary walks). Regions are numbered by their minimum face id.
struct SubgraphFaces {
  std::vector<int> vertex_set;                    // sorted s
  int num_regions = 0;
  std::vector<int> region_of_face;                // full-embedding face id -> region
  std::vector<std::vector<int>> region_vertices;  // per region, sorted
  std::vector<int> region_rep_face;               // min face id per region
  int outer_region = -1;                          // region containing the outer face
};

SubgraphFaces subgraph_faces(const Embedding& e, const std::vector<int>& s);

/// Shared Dijkstra for node-weighted incidence graphs (weights count on both
/// endpoints). Returns per-node distances from src; unreachable = -1.
std::vector<long long> node_weighted_distances(const std::vector<std::vector<int>>& adj,
                                               const std::vector<long long>& node_weight,
                                               int src);

}  // namespace baker
