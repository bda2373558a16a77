#pragma once

#include <vector>

#include "baker/embedding.hpp"
#include "baker/graph.hpp"
#include "baker/layering.hpp"
#include "baker/treedec.hpp"

namespace baker {

/// Which set to contract and which part of it to spare.
struct ContractionRequest {
  int i = 1;                 // index into [1..p]
  std::vector<int> z_prime;  // subset of Z_i left uncontracted
};

/// Quotient by the components of g[Z_i \ Z'].
QuotientGraph contract_decomposition(const Graph& g, const LayerSets& sets,
                                     const ContractionRequest& req);

/// Tree of nested connected components of the layer suffixes above each
/// Z-layer. Level j nodes are the components of g[layers > i_j]; V_t is the
/// slice of the component between consecutive Z-layer indices.
struct SupportTree {
  struct Node {
    int parent = -1;
    std::vector<int> children;
    int level = 0;
    std::vector<int> component;  // sorted; empty at the root
    std::vector<int> vt;         // sorted; empty at the root
  };
  std::vector<Node> nodes;  // nodes[0] is the dummy root
  int m_prime = 0;
  std::vector<long long> level_lower;  // i_j per level j in [1..m_prime]
};

SupportTree build_support_tree(const Embedding& e, const Layering& l,
                               const ResiduePlan& plan, int i);

/// Annulus between consecutive Z-layers: layers i_j+1 .. i_{j+1}.
struct Annulus {
  int level_j = 1;
  long long i_minus = 0, i_plus = 0;  // raw bounds; layers outside [1..m] are empty
  std::vector<int> vertices;          // sorted
  std::vector<int> top_layer;         // layer i_plus, the Z_i slice of the annulus
};

Annulus annulus_for_level(const Layering& l, const ResiduePlan& plan, int i, int j);

/// Per-face diagnostics of one annulus. Faces are the regions of the
/// embedding restricted to the annulus; a face is deep when it is not part of
/// the outer face of the top layer's embedding. kappa(f) combines one
/// representative per touched component of g[Z_i \ Z'] with the Z' vertices
/// on the boundary.
struct ClassifiedFace {
  int region = 0;
  bool deep = false;
  std::vector<int> boundary;                 // sorted vertices incident to the face
  std::vector<std::vector<int>> components;  // components of g[Z_i \ Z'] touching it
  std::vector<int> reps;                     // min boundary vertex per component
  std::vector<int> kappa;                    // sorted
  int w_kappa = 0;
};

struct FaceClassification {
  Annulus annulus;
  std::vector<ClassifiedFace> faces;
  int outer_region = -1;
};

FaceClassification classify_faces(const Embedding& e, const Layering& l,
                                  const Annulus& annulus, const std::vector<int>& z_i,
                                  const std::vector<int>& z_prime);

/// Exact maximum w_kappa-weighted vertex-face distance over the annulus's
/// incidence graph. Returns 0 for an empty annulus.
long long weighted_diameter(const Embedding& e, const FaceClassification& fc);

/// One quotient + heuristic-width measurement.
struct WidthSample {
  int i = 1;
  std::vector<int> z_prime;
  int quotient_n = 0;
  int quotient_m = 0;
  int width = 0;
  double ratio = 0.0;  // width / (p + |z_prime| + 1)
};

struct WidthReport {
  int p = 0;
  std::vector<WidthSample> samples;
  double max_ratio = 0.0;
};

/// For each i and sampled Z' (one sample per size in 0..zmax), contracts,
/// decomposes heuristically (apices added to all bags afterwards) and records
/// width against the p + |Z'| + 1 budget.
WidthReport treewidth_bound_report(const Graph& g, const LayerSets& sets,
                                   const ResiduePlan& plan, int zmax, uint64_t seed);

}  // namespace baker
