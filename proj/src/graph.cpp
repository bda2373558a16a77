#include "baker/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace baker {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Graph Graph::from_edges(std::vector<int> vertices, const std::vector<Edge>& edges,
                        std::vector<int> apex_set) {
  Graph g;
  g.ids_ = sorted_unique(std::move(vertices));
  for (int i = 0; i < static_cast<int>(g.ids_.size()); ++i) {
    if (g.ids_[i] < 0) throw InputError("negative vertex id");
    g.pos_[g.ids_[i]] = i;
  }
  g.adj_.assign(g.ids_.size(), {});
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    if (!g.has_vertex(a) || !g.has_vertex(b))
      throw InputError("edge references unknown vertex");
    Edge e = make_edge(a, b);
    if (!seen.insert(e).second) continue;
    g.adj_[g.pos_[e.first]].push_back(e.second);
    g.adj_[g.pos_[e.second]].push_back(e.first);
  }
  g.m_ = static_cast<int>(seen.size());
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.apex_ = sorted_unique(std::move(apex_set));
  for (int a : g.apex_)
    if (!g.has_vertex(a)) throw InputError("apex set references unknown vertex");
  return g;
}

int Graph::index_of(int v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) throw InputError("unknown vertex id " + std::to_string(v));
  return it->second;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int i = 0; i < num_vertices(); ++i)
    for (int w : adj_[i])
      if (ids_[i] < w) out.emplace_back(ids_[i], w);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_apex(int v) const {
  return std::binary_search(apex_.begin(), apex_.end(), v);
}

Graph Graph::without_apices() const {
  std::vector<int> keep;
  for (int v : ids_)
    if (!is_apex(v)) keep.push_back(v);
  return induced_subgraph(*this, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> verts;
  verts.reserve(s.size());
  for (int v : s) {
    if (!g.has_vertex(v)) throw InputError("induced_subgraph: unknown vertex id");
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Edge> edges;
  for (int v : verts)
    for (int w : g.neighbors(v))
      if (v < w && std::binary_search(verts.begin(), verts.end(), w))
        edges.emplace_back(v, w);
  std::vector<int> apex;
  for (int a : g.apex_set())
    if (std::binary_search(verts.begin(), verts.end(), a)) apex.push_back(a);
  return Graph::from_edges(verts, edges, apex);
}

QuotientGraph contract(const Graph& g, const std::vector<int>& x) {
  for (int v : x)
    if (!g.has_vertex(v)) throw InputError("contract: unknown vertex id");
  QuotientGraph q;
  Graph gx = induced_subgraph(g, x);
  q.contracted_set = gx.vertices();

  for (const auto& comp : connected_components(gx)) {
    int rep = comp.front();  // components are sorted, min id first
    for (int v : comp) q.image[v] = rep;
    q.preimage[rep] = comp;
  }
  for (int v : g.vertices()) {
    if (q.image.count(v)) continue;
    q.image[v] = v;
    q.preimage[v] = {v};
  }

  std::vector<int> verts;
  verts.reserve(q.preimage.size());
  for (const auto& [rep, pre] : q.preimage) {
    (void)pre;
    verts.push_back(rep);
  }
  std::set<Edge> edges;
  for (const auto& [u, w] : g.edges()) {
    int a = q.image[u], b = q.image[w];
    if (a != b) edges.insert(make_edge(a, b));
  }
  std::vector<int> apex;
  for (int a : g.apex_set()) apex.push_back(q.image[a]);
  q.graph = Graph::from_edges(verts, std::vector<Edge>(edges.begin(), edges.end()), apex);
  return q;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::set<int> unseen(g.vertices().begin(), g.vertices().end());
  for (int start : g.vertices()) {
    if (!unseen.count(start)) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    unseen.erase(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (unseen.erase(w)) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Bipartition bipartition(const Graph& g) {
  Bipartition result;
  std::unordered_map<int, int> color;
  std::unordered_map<int, int> parent;
  std::unordered_map<int, int> depth;
  for (int start : g.vertices()) {
    if (color.count(start)) continue;
    color[start] = 0;
    parent[start] = -1;
    depth[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (it->second == color[v]) {
          // Conflict edge (v,w): splice the two BFS-tree paths at their
          // lowest common ancestor to obtain an odd cycle.
          std::vector<int> pv{v}, pw{w};
          int a = v, b = w;
          while (depth[a] > depth[b]) pv.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
          while (a != b) {
            pv.push_back(a = parent[a]);
            pw.push_back(b = parent[b]);
          }
          // pv ends at the LCA, pw ends one step before it.
          std::vector<int> cycle(pv.begin(), pv.end());
          pw.pop_back();
          for (auto it2 = pw.rbegin(); it2 != pw.rend(); ++it2) cycle.push_back(*it2);
          result.odd_cycle = std::move(cycle);
          return result;
        }
      }
    }
  }
  result.coloring = std::move(color);
  return result;
}

}  // namespace baker
