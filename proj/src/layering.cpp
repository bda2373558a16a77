#include "baker/layering.hpp"

#include <algorithm>
#include <deque>

namespace baker {

const std::vector<int>& Layering::layer(int i) const {
  static const std::vector<int> empty;
  if (i < 1 || i > m) return empty;
  return layers[i];
}

Layering compute_layering(const Embedding& e) {
  Layering l;
  VfiGraph vfi(e);
  const int src = vfi.index_of({true, e.outer_face()});
  std::vector<int> dist(vfi.num_nodes(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : vfi.adj(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  for (int i = 0; i < vfi.num_vertex_nodes(); ++i) {
    VfiNode n = vfi.node_at(i);
    if (dist[i] < 0 || dist[i] % 2 == 0)
      throw StructureError("VFI distance to a vertex must be odd");
    int layer = (dist[i] + 1) / 2;
    l.ell[n.id] = layer;
    l.m = std::max(l.m, layer);
  }
  l.layers.assign(l.m + 1, {});
  for (int v : e.graph().vertices()) l.layers[l.ell[v]].push_back(v);
  for (auto& lay : l.layers) std::sort(lay.begin(), lay.end());
  l.bad_layers = classify_bad_layers(l, e);
  return l;
}

std::set<int> classify_bad_layers(const Layering& l, const Embedding& e) {
  std::set<int> bad;
  for (const auto& f : e.faces()) {
    if (!f.marked) continue;
    for (int v : f.boundary_vertices) bad.insert(l.ell.at(v));
  }
  return bad;
}

ResiduePlan choose_residues(const std::set<int>& bad_layers, int marked_face_count, int p) {
  if (p < 1) throw InputError("p must be at least 1");
  if (marked_face_count < 0) throw InputError("marked face count must be non-negative");
  ResiduePlan plan;
  plan.p = p;
  plan.p_prime = p + 2 * marked_face_count;
  std::set<int> bad_residues;
  for (int i : bad_layers) {
    int r = i % plan.p_prime;
    bad_residues.insert(r == 0 ? plan.p_prime : r);
  }
  for (int q = 1; q <= plan.p_prime && static_cast<int>(plan.good_residues.size()) < p; ++q)
    if (!bad_residues.count(q)) plan.good_residues.push_back(q);
  if (static_cast<int>(plan.good_residues.size()) < p)
    throw std::logic_error("fewer than p good residues; bad layers exceed 2 per marked face");
  return plan;
}

LayerSets build_layer_sets(const Layering& l, const ResiduePlan& plan) {
  LayerSets sets;
  sets.z.resize(plan.p);
  for (int i = 0; i < plan.p; ++i) {
    int q = plan.good_residues[i];
    for (int j = q; j <= l.m; j += plan.p_prime) {
      const auto& lay = l.layer(j);
      sets.z[i].insert(sets.z[i].end(), lay.begin(), lay.end());
    }
    std::sort(sets.z[i].begin(), sets.z[i].end());
  }
  return sets;
}

PlanarDecomposition build_layer_sets_multi(const std::vector<Embedding>& embeddings, int p) {
  PlanarDecomposition out;
  std::set<int> bad;
  int marked = 0;
  for (const auto& e : embeddings) {
    out.component_layerings.push_back(compute_layering(e));
    const auto& l = out.component_layerings.back();
    bad.insert(l.bad_layers.begin(), l.bad_layers.end());
    marked += e.num_marked_faces();
  }
  out.plan = choose_residues(bad, marked, p);
  out.sets.z.resize(p);
  for (size_t c = 0; c < embeddings.size(); ++c) {
    LayerSets part = build_layer_sets(out.component_layerings[c], out.plan);
    for (int i = 0; i < p; ++i) {
      auto& zi = out.sets.z[i];
      zi.insert(zi.end(), part.z[i].begin(), part.z[i].end());
    }
  }
  for (auto& zi : out.sets.z) std::sort(zi.begin(), zi.end());
  return out;
}

}  // namespace baker
