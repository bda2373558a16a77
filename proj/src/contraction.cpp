#include "baker/contraction.hpp"

#include <algorithm>
#include <map>

#include "baker/util.hpp"

namespace baker {

namespace {

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

QuotientGraph contract_decomposition(const Graph& g, const LayerSets& sets,
                                     const ContractionRequest& req) {
  if (req.i < 1 || req.i > static_cast<int>(sets.z.size()))
    throw InputError("contraction index out of range");
  const auto& zi = sets.z[req.i - 1];
  std::vector<int> zp = req.z_prime;
  std::sort(zp.begin(), zp.end());
  zp.erase(std::unique(zp.begin(), zp.end()), zp.end());
  for (int v : zp)
    if (!std::binary_search(zi.begin(), zi.end(), v))
      throw InputError("z_prime must be a subset of Z_i");
  return contract(g, set_difference_sorted(zi, zp));
}

SupportTree build_support_tree(const Embedding& e, const Layering& l,
                               const ResiduePlan& plan, int i) {
  if (i < 1 || i > plan.p) throw InputError("support tree index out of range");
  const Graph& g = e.graph();
  const int q = plan.good_residues[i - 1];
  const int pp = plan.p_prime;

  SupportTree tree;
  tree.m_prime = static_cast<int>(floordiv(l.m - q, pp)) + 2;
  tree.nodes.push_back({});  // dummy root at level 0
  tree.level_lower.assign(tree.m_prime + 1, 0);

  auto i_of = [&](int j) { return static_cast<long long>(j - 2) * pp + q; };

  // node index of the component containing each vertex, per level
  std::unordered_map<int, int> prev_level_node;
  for (int j = 1; j <= tree.m_prime; ++j) {
    tree.level_lower[j] = i_of(j);
    const long long lo = i_of(j), hi = i_of(j + 1);
    std::vector<int> above;
    for (int v : g.vertices())
      if (l.layer_of(v) > lo) above.push_back(v);
    std::unordered_map<int, int> this_level_node;
    for (const auto& comp : connected_components(induced_subgraph(g, above))) {
      SupportTree::Node node;
      node.level = j;
      node.component = comp;
      for (int v : comp)
        if (l.layer_of(v) > lo && l.layer_of(v) <= hi) node.vt.push_back(v);
      int parent = (j == 1) ? 0 : prev_level_node.at(comp.front());
      node.parent = parent;
      int idx = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(node));
      tree.nodes[parent].children.push_back(idx);
      for (int v : comp) this_level_node[v] = idx;
    }
    prev_level_node = std::move(this_level_node);
  }
  return tree;
}

Annulus annulus_for_level(const Layering& l, const ResiduePlan& plan, int i, int j) {
  if (i < 1 || i > plan.p) throw InputError("annulus set index out of range");
  const int q = plan.good_residues[i - 1];
  const int pp = plan.p_prime;
  Annulus a;
  a.level_j = j;
  a.i_minus = static_cast<long long>(j - 2) * pp + q + 1;
  a.i_plus = static_cast<long long>(j - 1) * pp + q;
  for (long long layer = std::max<long long>(1, a.i_minus);
       layer <= std::min<long long>(l.m, a.i_plus); ++layer) {
    const auto& lay = l.layer(static_cast<int>(layer));
    a.vertices.insert(a.vertices.end(), lay.begin(), lay.end());
  }
  std::sort(a.vertices.begin(), a.vertices.end());
  if (a.i_plus >= 1 && a.i_plus <= l.m)
    a.top_layer = l.layer(static_cast<int>(a.i_plus));
  return a;
}

FaceClassification classify_faces(const Embedding& e, const Layering& l,
                                  const Annulus& annulus, const std::vector<int>& z_i,
                                  const std::vector<int>& z_prime) {
  (void)l;
  FaceClassification fc;
  fc.annulus = annulus;
  if (annulus.vertices.empty()) return fc;

  SubgraphFaces ann = subgraph_faces(e, annulus.vertices);
  SubgraphFaces top = subgraph_faces(e, annulus.top_layer);
  fc.outer_region = ann.outer_region;

  std::vector<int> zp = z_prime;
  std::sort(zp.begin(), zp.end());
  auto rest = set_difference_sorted(z_i, zp);
  auto comps = connected_components(induced_subgraph(e.graph(), rest));

  for (int r = 0; r < ann.num_regions; ++r) {
    ClassifiedFace face;
    face.region = r;
    face.boundary = ann.region_vertices[r];
    // Shallow faces live inside the outer face of the top layer's embedding;
    // the annulus regions refine the top-layer regions, so one representative
    // face decides.
    int top_region = top.region_of_face[ann.region_rep_face[r]];
    face.deep = top_region != top.outer_region;
    if (face.deep) {
      for (const auto& comp : comps) {
        std::vector<int> meet;
        std::set_intersection(comp.begin(), comp.end(), face.boundary.begin(),
                              face.boundary.end(), std::back_inserter(meet));
        if (!meet.empty()) {
          face.components.push_back(comp);
          face.reps.push_back(meet.front());
        }
      }
      std::vector<int> zp_on_boundary;
      std::set_intersection(zp.begin(), zp.end(), face.boundary.begin(), face.boundary.end(),
                            std::back_inserter(zp_on_boundary));
      face.kappa = face.reps;
      face.kappa.insert(face.kappa.end(), zp_on_boundary.begin(), zp_on_boundary.end());
      std::sort(face.kappa.begin(), face.kappa.end());
      face.kappa.erase(std::unique(face.kappa.begin(), face.kappa.end()), face.kappa.end());
      face.w_kappa = static_cast<int>(face.kappa.size());
    }
    fc.faces.push_back(std::move(face));
  }
  return fc;
}

long long weighted_diameter(const Embedding& e, const FaceClassification& fc) {
  (void)e;
  const auto& verts = fc.annulus.vertices;
  if (verts.empty()) return 0;
  const int nv = static_cast<int>(verts.size());
  const int nr = static_cast<int>(fc.faces.size());
  std::vector<std::vector<int>> adj(nv + nr);
  std::vector<long long> weight(nv + nr, 0);
  auto vertex_index = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (int r = 0; r < nr; ++r) {
    weight[nv + r] = fc.faces[r].w_kappa;
    for (int v : fc.faces[r].boundary) {
      adj[vertex_index(v)].push_back(nv + r);
      adj[nv + r].push_back(vertex_index(v));
    }
  }
  long long best = 0;
  for (int s = 0; s < nv + nr; ++s) {
    auto dist = node_weighted_distances(adj, weight, s);
    for (long long d : dist) best = std::max(best, d);
  }
  return best;
}

WidthReport treewidth_bound_report(const Graph& g, const LayerSets& sets,
                                   const ResiduePlan& plan, int zmax, uint64_t seed) {
  WidthReport report;
  report.p = plan.p;
  for (int i = 1; i <= plan.p; ++i) {
    const auto& zi = sets.z[i - 1];
    for (int size = 0; size <= zmax; ++size) {
      if (size > static_cast<int>(zi.size())) break;
      Rng rng(seed ^ (uint64_t(i) << 32) ^ uint64_t(size));
      WidthSample sample;
      sample.i = i;
      sample.z_prime = rng.sample(zi, size);
      QuotientGraph q = contract_decomposition(g, sets, {i, sample.z_prime});
      sample.quotient_n = q.graph.num_vertices();
      sample.quotient_m = q.graph.num_edges();
      TreeDecomposition td = heuristic_decompose(q.graph.without_apices());
      td = add_apices(td, q.graph.apex_set());
      sample.width = td.width();
      sample.ratio = double(sample.width) / double(plan.p + size + 1);
      report.max_ratio = std::max(report.max_ratio, sample.ratio);
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

}  // namespace baker
