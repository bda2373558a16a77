#include "baker/embedding.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

namespace baker {

std::vector<Face> faces_from_rotation(const Graph& g,
                                      const std::map<int, std::vector<int>>& rotation) {
  // The rotation must list exactly the neighbors of every vertex.
  for (int v : g.vertices()) {
    auto it = rotation.find(v);
    std::vector<int> listed = it == rotation.end() ? std::vector<int>{} : it->second;
    std::sort(listed.begin(), listed.end());
    if (listed != g.neighbors(v))
      throw StructureError("rotation at vertex " + std::to_string(v) +
                           " is not a permutation of its neighbors");
  }

  std::vector<Face> faces;
  if (g.num_edges() == 0) {
    // Isolated vertices: one face per vertex is wrong on a sphere; a single
    // vertex has exactly one face covering everything.
    if (g.num_vertices() == 1) {
      Face f;
      f.id = 0;
      f.boundary_vertices = {g.vertices().front()};
      faces.push_back(std::move(f));
    } else if (g.num_vertices() > 1) {
      throw StructureError("faces_from_rotation requires a connected graph");
    }
    return faces;
  }

  // successor of neighbor u in the cyclic order at v
  std::map<int, std::unordered_map<int, int>> succ;
  for (int v : g.vertices()) {
    const auto& order = rotation.at(v);
    for (size_t i = 0; i < order.size(); ++i)
      succ[v][order[i]] = order[(i + 1) % order.size()];
  }

  std::set<DirEdge> dir_edges;
  for (const auto& [u, v] : g.edges()) {
    dir_edges.insert({u, v});
    dir_edges.insert({v, u});
  }
  std::set<DirEdge> used;
  for (const DirEdge& start : dir_edges) {
    if (used.count(start)) continue;
    Face f;
    f.id = static_cast<int>(faces.size());
    DirEdge cur = start;
    do {
      if (!used.insert(cur).second)
        throw StructureError("face walk does not close");
      f.walk.push_back(cur);
      cur = {cur.second, succ[cur.second][cur.first]};
    } while (cur != start);
    for (const auto& [a, b] : f.walk) {
      (void)b;
      f.boundary_vertices.push_back(a);
    }
    std::sort(f.boundary_vertices.begin(), f.boundary_vertices.end());
    f.boundary_vertices.erase(
        std::unique(f.boundary_vertices.begin(), f.boundary_vertices.end()),
        f.boundary_vertices.end());
    faces.push_back(std::move(f));
  }
  return faces;
}

Embedding Embedding::from_rotation(Graph g, std::map<int, std::vector<int>> rotation,
                                   std::optional<int> outer) {
  if (connected_components(g).size() != 1)
    throw StructureError("embedding requires a connected graph");
  Embedding e;
  e.faces_ = faces_from_rotation(g, rotation);
  long long euler = static_cast<long long>(g.num_vertices()) - g.num_edges() +
                    static_cast<long long>(e.faces_.size());
  if (euler != 2)
    throw StructureError("rotation system is not a genus-0 embedding (Euler check failed)");
  e.g_ = std::move(g);
  e.rot_ = std::move(rotation);
  for (const auto& f : e.faces_) {
    for (const auto& de : f.walk) e.face_of_dir_[de] = f.id;
    for (int v : f.boundary_vertices) e.faces_at_[v].push_back(f.id);
  }
  if (e.g_.num_vertices() == 1 && e.g_.num_edges() == 0)
    e.faces_at_[e.g_.vertices().front()] = {0};
  for (auto& [v, fs] : e.faces_at_) {
    (void)v;
    std::sort(fs.begin(), fs.end());
  }
  if (outer) {
    e.set_outer_face(*outer);
  } else {
    // default: maximum boundary walk length, ties to the smallest id
    int best = 0;
    for (const auto& f : e.faces_)
      if (f.walk.size() > e.faces_[best].walk.size()) best = f.id;
    e.outer_ = best;
  }
  return e;
}

void Embedding::set_outer_face(int id) {
  if (id < 0 || id >= num_faces()) throw InputError("unknown face id");
  outer_ = id;
}

void Embedding::set_marked_faces(const std::vector<int>& ids) {
  for (auto& f : faces_) f.marked = false;
  for (int id : ids) {
    if (id < 0 || id >= num_faces()) throw InputError("unknown face id in marked set");
    faces_[id].marked = true;
  }
}

std::vector<int> Embedding::marked_faces() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.marked) out.push_back(f.id);
  return out;
}

int Embedding::num_marked_faces() const {
  return static_cast<int>(marked_faces().size());
}

const std::vector<int>& Embedding::faces_at(int v) const {
  auto it = faces_at_.find(v);
  if (it == faces_at_.end()) throw InputError("unknown vertex id " + std::to_string(v));
  return it->second;
}

int Embedding::face_of_dir_edge(int u, int v) const {
  auto it = face_of_dir_.find({u, v});
  if (it == face_of_dir_.end()) throw InputError("unknown directed edge");
  return it->second;
}

VfiGraph::VfiGraph(const Embedding& e) {
  vertex_ids_ = e.graph().vertices();
  num_faces_ = e.num_faces();
  for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i)
    vertex_index_[vertex_ids_[i]] = i;
  adj_.assign(vertex_ids_.size() + num_faces_, {});
  const int nv = static_cast<int>(vertex_ids_.size());
  for (const auto& f : e.faces()) {
    for (int v : f.boundary_vertices) {
      adj_[vertex_index_[v]].push_back(nv + f.id);
      adj_[nv + f.id].push_back(vertex_index_[v]);
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

VfiNode VfiGraph::node_at(int idx) const {
  const int nv = num_vertex_nodes();
  if (idx < nv) return {false, vertex_ids_[idx]};
  return {true, idx - nv};
}

int VfiGraph::index_of(const VfiNode& n) const {
  if (n.is_face) {
    if (n.id < 0 || n.id >= num_faces_) throw InputError("unknown face node");
    return num_vertex_nodes() + n.id;
  }
  auto it = vertex_index_.find(n.id);
  if (it == vertex_index_.end()) throw InputError("unknown vertex node");
  return it->second;
}

bool VfiGraph::connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
  }
  return reached == num_nodes();
}

VfiGraph build_vfi(const Embedding& e) { return VfiGraph(e); }

std::vector<long long> node_weighted_distances(const std::vector<std::vector<int>>& adj,
                                               const std::vector<long long>& node_weight,
                                               int src) {
  std::vector<long long> dist(adj.size(), -1);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = node_weight[src];
  heap.push({dist[src], src});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (int y : adj[x]) {
      long long nd = d + 1 + node_weight[y];
      if (dist[y] < 0 || nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

long long vfi_distance(const VfiGraph& vfi, const VfiNode& a, const VfiNode& b,
                       const std::map<int, long long>* face_weights) {
  const int n = vfi.num_nodes();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = vfi.adj(i);
  std::vector<long long> weight(n, 0);
  if (face_weights) {
    for (int i = vfi.num_vertex_nodes(); i < n; ++i) {
      auto node = vfi.node_at(i);
      auto it = face_weights->find(node.id);
      if (it == face_weights->end())
        throw InputError("face weight map must cover every face");
      if (it->second < 0) throw InputError("face weights must be non-negative");
      weight[i] = it->second;
    }
  }
  int ia = vfi.index_of(a);
  int ib = vfi.index_of(b);
  auto dist = node_weighted_distances(adj, weight, ia);
  if (!face_weights) {
    // unweighted distance from a node to itself is 0, also for faces
    if (ia == ib) return 0;
  }
  return dist[ib];
}

SubgraphFaces subgraph_faces(const Embedding& e, const std::vector<int>& s) {
  SubgraphFaces out;
  out.vertex_set = s;
  std::sort(out.vertex_set.begin(), out.vertex_set.end());
  out.vertex_set.erase(std::unique(out.vertex_set.begin(), out.vertex_set.end()),
                       out.vertex_set.end());
  for (int v : out.vertex_set)
    if (!e.graph().has_vertex(v)) throw InputError("subgraph_faces: unknown vertex id");

  const int nf = e.num_faces();
  std::vector<int> uf(nf);
  for (int i = 0; i < nf; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto in_s = [&](int v) {
    return std::binary_search(out.vertex_set.begin(), out.vertex_set.end(), v);
  };
  for (const auto& [u, v] : e.graph().edges()) {
    if (in_s(u) && in_s(v)) continue;
    int a = find(e.face_of_dir_edge(u, v));
    int b = find(e.face_of_dir_edge(v, u));
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }

  out.region_of_face.assign(nf, -1);
  for (int f = 0; f < nf; ++f) {
    int r = find(f);
    if (out.region_of_face[r] < 0) {
      out.region_of_face[r] = out.num_regions++;
      out.region_rep_face.push_back(r);
    }
    out.region_of_face[f] = out.region_of_face[r];
  }
  out.region_vertices.assign(out.num_regions, {});
  for (int v : out.vertex_set) {
    std::set<int> regions;
    for (int f : e.faces_at(v)) regions.insert(out.region_of_face[f]);
    for (int r : regions) out.region_vertices[r].push_back(v);
  }
  for (auto& rv : out.region_vertices) std::sort(rv.begin(), rv.end());
  out.outer_region = out.region_of_face[e.outer_face()];
  return out;
}

}  // namespace baker
