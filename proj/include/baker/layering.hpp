#pragma once

#include <set>
#include <vector>

#include "baker/embedding.hpp"
#include "baker/graph.hpp"

namespace baker {

/// BFS layers of the vertex-face incidence graph, measured from the outer
/// face: layer i holds the vertices at VFI distance 2i-1.
struct Layering {
  std::unordered_map<int, int> ell;      // vertex -> layer index in [1..m]
  std::vector<std::vector<int>> layers;  // 1-based; layers[0] unused
  int m = 0;
  std::set<int> bad_layers;  // indices hit by marked faces

  const std::vector<int>& layer(int i) const;  // empty outside [1..m]
  int layer_of(int v) const { return ell.at(v); }
};

Layering compute_layering(const Embedding& e);

/// Indices of layers whose vertices touch a marked face.
std::set<int> classify_bad_layers(const Layering& l, const Embedding& e);

/// Residues chosen for the contraction sets: p_prime = p + 2 * (marked face
/// count); good_residues are the p smallest residues in [1..p_prime] not
/// congruent to any bad layer index.
struct ResiduePlan {
  int p = 0;
  int p_prime = 0;
  std::vector<int> good_residues;
};

ResiduePlan choose_residues(const std::set<int>& bad_layers, int marked_face_count, int p);

/// Z_i = union of the layers with index congruent to good_residues[i-1]
/// modulo p_prime. Sets may be empty and are pairwise disjoint.
struct LayerSets {
  std::vector<std::vector<int>> z;  // z[i-1] sorted
};

LayerSets build_layer_sets(const Layering& l, const ResiduePlan& plan);

/// Layer machinery for a possibly disconnected planar graph: per-component
/// layerings share one residue plan (bad layers unioned, marked faces
/// summed); Z sets are componentwise unions.
struct PlanarDecomposition {
  std::vector<Layering> component_layerings;  // parallel to the embeddings
  ResiduePlan plan;
  LayerSets sets;  // global vertex ids
};

PlanarDecomposition build_layer_sets_multi(const std::vector<Embedding>& embeddings, int p);

}  // namespace baker
