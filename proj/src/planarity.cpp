#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "baker/embedding.hpp"

namespace baker {

namespace {

// Biconnected components as edge lists, via iterative DFS with an edge stack.
std::vector<std::vector<Edge>> blocks_of(const Graph& g) {
  std::vector<std::vector<Edge>> blocks;
  std::unordered_map<int, int> disc, low, parent;
  std::vector<Edge> estack;
  int timer = 0;

  struct Frame {
    int v;
    size_t next = 0;
  };

  for (int start : g.vertices()) {
    if (disc.count(start)) continue;
    parent[start] = -1;
    std::vector<Frame> stack{{start}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      int v = fr.v;
      const auto& nbrs = g.neighbors(v);
      if (fr.next < nbrs.size()) {
        int w = nbrs[fr.next++];
        if (!disc.count(w)) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          estack.push_back({v, w});
          stack.push_back({w});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          std::vector<Edge> block;
          while (!estack.empty()) {
            Edge e = estack.back();
            estack.pop_back();
            block.push_back(make_edge(e.first, e.second));
            if (e == Edge{p, v}) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

struct BlockEmbedder {
  // All containers are keyed by original vertex ids; the block is small and
  // the sets keep iteration deterministic.
  std::set<int> verts;
  std::map<int, std::vector<int>> adj;  // sorted
  std::set<Edge> all_edges;

  std::set<int> embedded_v;
  std::set<Edge> embedded_e;
  std::vector<std::vector<int>> faces;  // directed vertex cycles

  explicit BlockEmbedder(const std::vector<Edge>& edges) {
    for (const auto& [u, v] : edges) {
      verts.insert(u);
      verts.insert(v);
      all_edges.insert({u, v});
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj) {
      (void)v;
      std::sort(nb.begin(), nb.end());
    }
  }

  std::vector<int> initial_cycle() const {
    int start = *verts.begin();
    std::map<int, int> par, depth;
    par[start] = -1;
    depth[start] = 0;
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nb = adj.at(v);
      if (next >= nb.size()) {
        stack.pop_back();
        continue;
      }
      int w = nb[next++];
      if (!par.count(w)) {
        par[w] = v;
        depth[w] = depth[v] + 1;
        stack.emplace_back(w, 0);
      } else if (w != par[v] && depth[w] < depth[v]) {
        std::vector<int> cycle;
        for (int x = v; x != w; x = par[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());  // w ... v
        return cycle;
      }
    }
    throw StructureError("biconnected block without a cycle");
  }

  struct Fragment {
    std::vector<int> attachments;  // sorted embedded vertices
    std::vector<int> interior;     // sorted unembedded vertices; empty = chord
    Edge chord{-1, -1};
  };

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    for (const auto& e : all_edges) {
      if (embedded_e.count(e)) continue;
      if (embedded_v.count(e.first) && embedded_v.count(e.second)) {
        Fragment f;
        f.attachments = {e.first, e.second};
        std::sort(f.attachments.begin(), f.attachments.end());
        f.chord = e;
        out.push_back(std::move(f));
      }
    }
    std::set<int> rest;
    for (int v : verts)
      if (!embedded_v.count(v)) rest.insert(v);
    while (!rest.empty()) {
      int start = *rest.begin();
      Fragment f;
      std::set<int> attach;
      std::deque<int> queue{start};
      rest.erase(start);
      std::vector<int> comp{start};
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj.at(v)) {
          if (embedded_v.count(w)) {
            attach.insert(w);
          } else if (rest.erase(w)) {
            comp.push_back(w);
            queue.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      f.interior = std::move(comp);
      f.attachments.assign(attach.begin(), attach.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  // Path between two attachments whose interior lies inside the fragment.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.interior.empty()) return {f.chord.first, f.chord.second};
    int a = f.attachments.front();
    std::map<int, int> par;
    std::deque<int> queue;
    auto is_interior = [&](int v) {
      return std::binary_search(f.interior.begin(), f.interior.end(), v);
    };
    for (int x : adj.at(a))
      if (is_interior(x) && !par.count(x)) {
        par[x] = -1;
        queue.push_back(x);
      }
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : adj.at(x)) {
        if (embedded_v.count(w) && w != a) {
          std::vector<int> path{w};
          for (int y = x; y != -1; y = par[y]) path.push_back(y);
          path.push_back(a);
          std::reverse(path.begin(), path.end());  // a ... w
          return path;
        }
        if (is_interior(w) && !par.count(w)) {
          par[w] = x;
          queue.push_back(w);
        }
      }
    }
    throw StructureError("fragment with a single attachment in a biconnected block");
  }

  void embed_path(size_t face_idx, const std::vector<int>& path) {
    const std::vector<int> F = faces[face_idx];
    int a = path.front(), b = path.back();
    size_t ia = std::find(F.begin(), F.end(), a) - F.begin();
    size_t ib = std::find(F.begin(), F.end(), b) - F.begin();
    std::vector<int> arc_ab, arc_ba;
    for (size_t i = ia;; i = (i + 1) % F.size()) {
      arc_ab.push_back(F[i]);
      if (i == ib) break;
    }
    for (size_t i = ib;; i = (i + 1) % F.size()) {
      arc_ba.push_back(F[i]);
      if (i == ia) break;
    }
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    std::vector<int> f1 = arc_ab;  // a..b then path interior reversed
    for (auto it = interior.rbegin(); it != interior.rend(); ++it) f1.push_back(*it);
    std::vector<int> f2 = arc_ba;  // b..a then path interior forward
    for (int x : interior) f2.push_back(x);
    faces[face_idx] = std::move(f1);
    faces.push_back(std::move(f2));

    for (int x : interior) embedded_v.insert(x);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      embedded_e.insert(make_edge(path[i], path[i + 1]));
  }

  // Demoucron: repeatedly embed a path of some fragment into an admissible
  // face; a fragment with no admissible face certifies non-planarity.
  void run() {
    std::vector<int> cycle = initial_cycle();
    faces.push_back(cycle);
    faces.emplace_back(cycle.rbegin(), cycle.rend());
    for (int v : cycle) embedded_v.insert(v);
    for (size_t i = 0; i < cycle.size(); ++i)
      embedded_e.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

    while (embedded_e.size() < all_edges.size()) {
      auto frags = fragments();
      std::vector<std::set<int>> face_verts(faces.size());
      for (size_t i = 0; i < faces.size(); ++i)
        face_verts[i] = std::set<int>(faces[i].begin(), faces[i].end());

      int best_frag = -1, best_count = -1, best_face = -1;
      for (size_t fi = 0; fi < frags.size(); ++fi) {
        int count = 0, first_face = -1;
        for (size_t j = 0; j < faces.size(); ++j) {
          bool ok = true;
          for (int atVertex : frags[fi].attachments)
            if (!face_verts[j].count(atVertex)) {
              ok = false;
              break;
            }
          if (ok) {
            ++count;
            if (first_face < 0) first_face = static_cast<int>(j);
          }
        }
        if (count == 0) throw NonPlanarError("graph is not planar");
        if (best_frag < 0 || count < best_count) {
          best_frag = static_cast<int>(fi);
          best_count = count;
          best_face = first_face;
        }
      }
      embed_path(best_face, fragment_path(frags[best_frag]));
    }
  }

  // Rotation at every block vertex, recovered from the face walks: entering v
  // from u, the walk leaves towards the rotation successor of u.
  std::map<int, std::vector<int>> rotations() const {
    std::map<int, std::map<int, int>> succ;  // v -> (in-neighbor -> out-neighbor)
    for (const auto& F : faces) {
      size_t L = F.size();
      for (size_t i = 0; i < L; ++i) {
        int u = F[i], v = F[(i + 1) % L], w = F[(i + 2) % L];
        succ[v][u] = w;
      }
    }
    std::map<int, std::vector<int>> rot;
    for (int v : verts) {
      const auto& s = succ.at(v);
      int start = s.begin()->first;
      std::vector<int> order;
      int cur = start;
      do {
        order.push_back(cur);
        cur = s.at(cur);
      } while (cur != start && order.size() <= s.size());
      if (order.size() != s.size())
        throw StructureError("face walks do not induce a rotation");
      rot[v] = std::move(order);
    }
    return rot;
  }
};

}  // namespace

Embedding embed_planar(const Graph& g) {
  if (!g.apex_set().empty())
    throw InputError("embed_planar expects the apex-free part of the graph");
  if (g.num_vertices() == 0) throw InputError("embed_planar: empty graph");
  if (connected_components(g).size() != 1)
    throw StructureError("embed_planar requires a connected graph");

  std::map<int, std::vector<int>> rot;
  for (const auto& block : blocks_of(g)) {
    std::map<int, std::vector<int>> block_rot;
    if (block.size() == 1) {
      block_rot[block[0].first] = {block[0].second};
      block_rot[block[0].second] = {block[0].first};
    } else {
      BlockEmbedder be(block);
      be.run();
      block_rot = be.rotations();
    }
    // Splice each block's cycle into one corner at shared (cut) vertices,
    // starting from the smallest neighbor for determinism.
    for (auto& [v, cyc] : block_rot) {
      size_t mi = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
      std::rotate(cyc.begin(), cyc.begin() + mi, cyc.end());
      auto& target = rot[v];
      target.insert(target.end(), cyc.begin(), cyc.end());
    }
  }
  for (int v : g.vertices())
    if (!rot.count(v)) rot[v] = {};
  return Embedding::from_rotation(g, std::move(rot));
}

}  // namespace baker
