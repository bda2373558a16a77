#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "baker/embedding.hpp"
#include "baker/generate.hpp"
#include "baker/util.hpp"

using namespace baker;

namespace {

Graph complete_graph(int n) {
  std::vector<int> verts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) verts.push_back(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(verts, edges);
}

Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  return Graph::from_edges({0, 1, 2, 3, 4, 5}, edges);
}

void check_embedding_wellformed(const Embedding& e) {
  const Graph& g = e.graph();
  long long euler = g.num_vertices() - g.num_edges() + e.num_faces();
  CHECK(euler == 2);
  std::set<DirEdge> seen;
  for (const auto& f : e.faces())
    for (const auto& de : f.walk) CHECK(seen.insert(de).second);
  CHECK(static_cast<int>(seen.size()) == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("faces_from_rotation on small shapes") {
  GeneratedGraph c4 = gen_cycle(4);
  auto faces = faces_from_rotation(c4.graph, c4.rotation);
  CHECK(faces.size() == 2);
  for (const auto& f : faces) CHECK(f.walk.size() == 4);

  Graph edge = Graph::from_edges({0, 1}, {{0, 1}});
  std::map<int, std::vector<int>> rot{{0, {1}}, {1, {0}}};
  auto ef = faces_from_rotation(edge, rot);
  REQUIRE(ef.size() == 1);
  CHECK(ef[0].walk.size() == 2);  // a bridge is traversed twice

  GeneratedGraph g33 = gen_grid(3, 3);
  auto gf = faces_from_rotation(g33.graph, g33.rotation);
  CHECK(gf.size() == 5);  // four unit squares plus the outer face

  std::map<int, std::vector<int>> bad{{0, {1, 1}}, {1, {0}}};
  CHECK_THROWS_AS(faces_from_rotation(edge, bad), StructureError);
}

TEST_CASE("embed_planar on C4, K4, K5") {
  Embedding e4 = embed_planar(gen_cycle(4).graph);
  CHECK(e4.num_faces() == 2);
  for (const auto& f : e4.faces()) CHECK(f.boundary_vertices.size() == 4);
  check_embedding_wellformed(e4);

  Embedding ek4 = embed_planar(complete_graph(4));
  CHECK(ek4.num_faces() == 4);
  for (const auto& f : ek4.faces()) CHECK(f.boundary_vertices.size() == 3);
  check_embedding_wellformed(ek4);

  CHECK_THROWS_AS(embed_planar(complete_graph(5)), NonPlanarError);
  CHECK_THROWS_AS(embed_planar(k33()), NonPlanarError);
}

TEST_CASE("embed_planar handles cut vertices and bridges") {
  // two triangles sharing a vertex, plus a pendant path
  Graph g = Graph::from_edges({0, 1, 2, 3, 4, 5, 6},
                              {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  Embedding e = embed_planar(g);
  check_embedding_wellformed(e);
}

TEST_CASE("embed_planar matches Euler on generated planar graphs") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    int n = 6 + static_cast<int>(seed) * 4;
    GeneratedGraph gg = gen_random_planar(n, n + static_cast<int>(seed), 7100 + seed);
    Embedding e = embed_planar(gg.graph);  // ignore the generated rotation on purpose
    check_embedding_wellformed(e);
    CHECK(build_vfi(e).connected());
  }
}

TEST_CASE("embed_planar across densities, from trees to triangulations") {
  for (uint64_t seed = 0; seed < 18; ++seed) {
    int n = 5 + static_cast<int>(seed) * 6;
    for (int target : {n - 1, n + n / 2, 3 * n - 6}) {
      GeneratedGraph gg = gen_random_planar(n, target, 7500 + 7 * seed + target);
      check_embedding_wellformed(embed_planar(gg.graph));
    }
  }
  // chorded grids exercise blocks of higher connectivity
  for (uint64_t seed = 0; seed < 4; ++seed) {
    GeneratedGraph gg = gen_grid_with_chords(5, 6, 6, 7600 + seed);
    check_embedding_wellformed(embed_planar(gg.graph));
  }
}

TEST_CASE("generated random planar graphs pass the planarity check") {
  GeneratedGraph gg = gen_random_planar(50, 100, 7);
  Embedding e = embed_planar(gg.graph);
  check_embedding_wellformed(e);
}

TEST_CASE("vfi_distance rejects unknown nodes") {
  Embedding e = embed_planar(gen_cycle(4).graph);
  VfiGraph vfi = build_vfi(e);
  CHECK_THROWS_AS(vfi_distance(vfi, {false, 99}, {true, 0}), InputError);
  CHECK_THROWS_AS(vfi_distance(vfi, {true, 0}, {true, 99}), InputError);
  std::map<int, long long> partial{{0, 1}};  // missing face 1
  CHECK_THROWS_AS(vfi_distance(vfi, {true, 0}, {true, 1}, &partial), InputError);
}

TEST_CASE("single vertex embedding") {
  Embedding e = embed_planar(Graph::from_edges({5}, {}));
  REQUIRE(e.num_faces() == 1);
  CHECK(e.face(0).boundary_vertices == std::vector<int>{5});
  VfiGraph vfi = build_vfi(e);
  CHECK(vfi.num_nodes() == 2);
  CHECK(vfi.adj(0).size() == 1);
}

TEST_CASE("rotation input for non-planar graph is rejected") {
  Graph k5 = complete_graph(5);
  std::map<int, std::vector<int>> rot;
  for (int v : k5.vertices()) rot[v] = k5.neighbors(v);
  CHECK_THROWS_AS(Embedding::from_rotation(k5, rot), StructureError);
}

TEST_CASE("build_vfi shapes") {
  Embedding c4 = embed_planar(gen_cycle(4).graph);
  VfiGraph v4 = build_vfi(c4);
  CHECK(v4.num_nodes() == 6);
  for (int f = 0; f < 2; ++f) CHECK(v4.adj(v4.index_of({true, f})).size() == 4);
  CHECK(v4.connected());

  Embedding k4 = embed_planar(complete_graph(4));
  VfiGraph vk = build_vfi(k4);
  CHECK(vk.num_nodes() == 8);
  int incidences = 0;
  for (int i = 0; i < vk.num_nodes(); ++i) incidences += static_cast<int>(vk.adj(i).size());
  CHECK(incidences == 24);  // 12 incidences, both directions
  CHECK(vk.connected());
}

TEST_CASE("vfi_distance unweighted on C4") {
  Embedding e = embed_planar(gen_cycle(4).graph);
  VfiGraph vfi = build_vfi(e);
  VfiNode outer{true, e.outer_face()};
  for (int v : e.graph().vertices()) CHECK(vfi_distance(vfi, outer, {false, v}) == 1);
  VfiNode inner{true, 1 - e.outer_face()};
  CHECK(vfi_distance(vfi, outer, inner) == 2);
  CHECK(vfi_distance(vfi, outer, outer) == 0);
}

TEST_CASE("weighted vfi_distance matches exhaustive path enumeration") {
  Embedding e = embed_planar(complete_graph(4));
  VfiGraph vfi = build_vfi(e);
  const int n = vfi.num_nodes();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = vfi.adj(i);

  for (uint64_t seed = 0; seed < 6; ++seed) {
    Rng rng(4400 + seed);
    std::map<int, long long> weights;
    std::vector<long long> node_weight(n, 0);
    for (int f = 0; f < e.num_faces(); ++f) {
      weights[f] = static_cast<long long>(rng.below(4));
      node_weight[vfi.index_of({true, f})] = weights[f];
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        long long got = vfi_distance(vfi, vfi.node_at(a), vfi.node_at(b), &weights);
        long long want = oracle::min_cost_path(adj, node_weight, a, b);
        CHECK(got == want);
      }
    // face-to-itself distance is its own weight
    for (int f = 0; f < e.num_faces(); ++f)
      CHECK(vfi_distance(vfi, {true, f}, {true, f}, &weights) == weights[f]);
  }
}

TEST_CASE("weighted vfi_distance satisfies the triangle inequality") {
  GeneratedGraph gg = gen_random_planar(10, 16, 91);
  Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
  VfiGraph vfi = build_vfi(e);
  Rng rng(92);
  std::map<int, long long> weights;
  for (int f = 0; f < e.num_faces(); ++f) weights[f] = static_cast<long long>(rng.below(5));
  const int n = vfi.num_nodes();
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d[a][b] = vfi_distance(vfi, vfi.node_at(a), vfi.node_at(b), &weights);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
}

TEST_CASE("zero weights equal no weights on all node pairs") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    int n = 4 + static_cast<int>(seed) * 2;  // up to 18
    GeneratedGraph gg = gen_random_planar(n, n + 3, 5200 + seed);
    Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
    VfiGraph vfi = build_vfi(e);
    std::map<int, long long> zero;
    for (int f = 0; f < e.num_faces(); ++f) zero[f] = 0;
    for (int a = 0; a < vfi.num_nodes(); ++a)
      for (int b = 0; b < vfi.num_nodes(); ++b)
        CHECK(vfi_distance(vfi, vfi.node_at(a), vfi.node_at(b), &zero) ==
              vfi_distance(vfi, vfi.node_at(a), vfi.node_at(b)));
  }
}

TEST_CASE("outer face default and override") {
  GeneratedGraph gg = gen_grid(3, 3);
  Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
  // the outer face of a grid has the longest walk
  for (const auto& f : e.faces())
    CHECK(f.walk.size() <= e.face(e.outer_face()).walk.size());
  e.set_outer_face(0);
  CHECK(e.outer_face() == 0);
  CHECK_THROWS_AS(e.set_outer_face(99), InputError);
}

TEST_CASE("marked faces roundtrip") {
  GeneratedGraph gg = gen_grid(3, 3);
  Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
  e.set_marked_faces({1, 3});
  CHECK(e.marked_faces() == std::vector<int>{1, 3});
  CHECK(e.num_marked_faces() == 2);
  e.set_marked_faces({});
  CHECK(e.num_marked_faces() == 0);
}

TEST_CASE("subgraph_faces merges regions across deleted edges") {
  GeneratedGraph gg = gen_grid(3, 3);
  Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
  // full vertex set: regions are exactly the faces
  SubgraphFaces all = subgraph_faces(e, e.graph().vertices());
  CHECK(all.num_regions == e.num_faces());
  // boundary ring only: the interior collapses into a single inner region
  std::vector<int> ring{0, 1, 2, 3, 5, 6, 7, 8};
  SubgraphFaces sub = subgraph_faces(e, ring);
  CHECK(sub.num_regions == 2);
  CHECK(sub.outer_region != -1);
  // empty set: one region covering everything
  SubgraphFaces none = subgraph_faces(e, {});
  CHECK(none.num_regions == 1);
}
