#include "baker/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "baker/util.hpp"

namespace baker {

namespace {

// Rotation system of a straight-line drawing: neighbors sorted by angle.
std::map<int, std::vector<int>> rotation_from_coords(
    const Graph& g, const std::map<int, std::pair<double, double>>& xy) {
  std::map<int, std::vector<int>> rot;
  for (int v : g.vertices()) {
    std::vector<int> nb = g.neighbors(v);
    auto [vx, vy] = xy.at(v);
    std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) {
      auto [ax, ay] = xy.at(a);
      auto [bx, by] = xy.at(b);
      return std::atan2(ay - vy, ax - vx) < std::atan2(by - vy, bx - vx);
    });
    rot[v] = std::move(nb);
  }
  return rot;
}

std::map<int, std::vector<int>> rotation_from_faces(
    const std::vector<int>& vertices, const std::vector<std::array<int, 3>>& faces) {
  std::map<int, std::map<int, int>> succ;
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i) succ[f[(i + 1) % 3]][f[i]] = f[(i + 2) % 3];
  std::map<int, std::vector<int>> rot;
  for (int v : vertices) {
    const auto& s = succ.at(v);
    std::vector<int> order;
    int cur = s.begin()->first;
    do {
      order.push_back(cur);
      cur = s.at(cur);
    } while (cur != order.front() && order.size() <= s.size());
    if (order.size() != s.size())
      throw StructureError("triangulation faces do not induce a rotation");
    rot[v] = std::move(order);
  }
  return rot;
}

}  // namespace

GeneratedGraph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
  GeneratedGraph out;
  std::vector<int> verts;
  std::vector<Edge> edges;
  std::map<int, std::pair<double, double>> xy;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      verts.push_back(id(r, c));
      xy[id(r, c)] = {double(c), double(r)};
      if (r + 1 < rows) edges.push_back(make_edge(id(r, c), id(r + 1, c)));
      if (c + 1 < cols) edges.push_back(make_edge(id(r, c), id(r, c + 1)));
    }
  out.graph = Graph::from_edges(verts, edges);
  out.rotation = rotation_from_coords(out.graph, xy);
  return out;
}

GeneratedGraph gen_cycle(int n) {
  if (n == 1) {
    GeneratedGraph out;
    out.graph = Graph::from_edges({0}, {});
    out.rotation[0] = {};
    return out;
  }
  if (n < 3) throw InputError("cycle needs n >= 3 (or n == 1)");
  GeneratedGraph out;
  std::vector<int> verts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    verts.push_back(i);
    edges.push_back(make_edge(i, (i + 1) % n));
  }
  out.graph = Graph::from_edges(verts, edges);
  for (int i = 0; i < n; ++i)
    out.rotation[i] = {(i + n - 1) % n, (i + 1) % n};
  return out;
}

GeneratedGraph gen_random_planar(int n, int target_edges, uint64_t seed) {
  if (n == 1) return gen_cycle(1);
  if (n < 3) throw InputError("random planar generator needs n >= 3 (or n == 1)");
  Rng rng(seed);

  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::set<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  std::set<Edge> tree{{0, 1}, {0, 2}};
  for (int t = 3; t < n; ++t) {
    size_t fi = static_cast<size_t>(rng.below(faces.size()));
    auto [a, b, c] = faces[fi];
    faces[fi] = {a, b, t};
    faces.push_back({b, c, t});
    faces.push_back({c, a, t});
    edges.insert(make_edge(t, a));
    edges.insert(make_edge(t, b));
    edges.insert(make_edge(t, c));
    tree.insert(make_edge(t, a));
  }

  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  auto rot = rotation_from_faces(verts, faces);

  target_edges = std::max(target_edges, n - 1);
  std::vector<Edge> deletable;
  for (const auto& e : edges)
    if (!tree.count(e)) deletable.push_back(e);
  rng.shuffle(deletable);
  for (const auto& e : deletable) {
    if (static_cast<int>(edges.size()) <= target_edges) break;
    edges.erase(e);
    auto& ra = rot[e.first];
    ra.erase(std::find(ra.begin(), ra.end(), e.second));
    auto& rb = rot[e.second];
    rb.erase(std::find(rb.begin(), rb.end(), e.first));
  }

  GeneratedGraph out;
  out.graph = Graph::from_edges(verts, {edges.begin(), edges.end()});
  out.rotation = std::move(rot);
  return out;
}

GeneratedGraph gen_grid_with_chords(int rows, int cols, int chords, uint64_t seed) {
  if (rows < 2 || cols < 2) throw InputError("chorded grid needs at least 2x2");
  Rng rng(seed);
  GeneratedGraph grid = gen_grid(rows, cols);
  std::vector<int> verts = grid.graph.vertices();
  std::vector<Edge> edges = grid.graph.edges();
  std::map<int, std::pair<double, double>> xy;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) xy[id(r, c)] = {double(c), double(r)};

  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) cells.emplace_back(r, c);
  rng.shuffle(cells);
  chords = std::min<int>(chords, static_cast<int>(cells.size()));
  for (int i = 0; i < chords; ++i) {
    auto [r, c] = cells[i];
    if (rng.below(2) == 0)
      edges.push_back(make_edge(id(r, c), id(r + 1, c + 1)));
    else
      edges.push_back(make_edge(id(r, c + 1), id(r + 1, c)));
  }

  GeneratedGraph out;
  out.graph = Graph::from_edges(verts, edges);
  out.rotation = rotation_from_coords(out.graph, xy);
  return out;
}

}  // namespace baker
