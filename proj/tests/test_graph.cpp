#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "baker/graph.hpp"
#include "baker/util.hpp"

using namespace baker;

namespace {

Graph cycle_on(const std::vector<int>& ids) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < ids.size(); ++i)
    edges.push_back(make_edge(ids[i], ids[(i + 1) % ids.size()]));
  return Graph::from_edges(ids, edges);
}

Graph complete_on(const std::vector<int>& ids) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j) edges.push_back(make_edge(ids[i], ids[j]));
  return Graph::from_edges(ids, edges);
}

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges({0, 1}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges({0, 1}, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges({0, 1}, {}, {5}), InputError);
  Graph g = Graph::from_edges({0, 1}, {{0, 1}, {1, 0}});  // parallel edges merge
  CHECK(g.num_edges() == 1);
}

TEST_CASE("induced_subgraph") {
  Graph c4 = cycle_on({1, 2, 3, 4});
  Graph sub = induced_subgraph(c4, {1, 2});
  CHECK(sub.num_vertices() == 2);
  CHECK(sub.num_edges() == 1);
  CHECK(sub.has_edge(1, 2));

  Graph empty = induced_subgraph(c4, {});
  CHECK(empty.num_vertices() == 0);
  CHECK(empty.num_edges() == 0);

  Graph k4 = complete_on({1, 2, 3, 4});
  Graph tri = induced_subgraph(k4, {1, 2, 3});
  CHECK(tri.num_edges() == 3);

  CHECK_THROWS_AS(induced_subgraph(c4, {9}), InputError);
}

TEST_CASE("contract basics") {
  Graph path = Graph::from_edges({10, 20, 30}, {{10, 20}, {20, 30}});
  QuotientGraph q = contract(path, {10, 20});
  CHECK(q.graph.num_vertices() == 2);
  CHECK(q.graph.num_edges() == 1);
  CHECK(q.preimage.at(10) == std::vector<int>{10, 20});
  CHECK(q.preimage.at(30) == std::vector<int>{30});
  CHECK(q.contracted_set == std::vector<int>{10, 20});

  QuotientGraph id = contract(path, {});
  CHECK(id.graph.num_vertices() == 3);
  CHECK(id.graph.num_edges() == 2);
  for (int v : path.vertices()) CHECK(id.preimage.at(v) == std::vector<int>{v});
}

TEST_CASE("contract of non-adjacent set keeps the graph") {
  // C4 with x = two opposite vertices: two singleton components, no change.
  Graph c4 = cycle_on({1, 2, 3, 4});
  auto comps = oracle::components(induced_subgraph(c4, {1, 3}));
  REQUIRE(comps.size() == 2);  // the oracle confirms two singleton components
  QuotientGraph q = contract(c4, {1, 3});
  CHECK(q.graph.num_vertices() == 4);
  CHECK(q.graph.num_edges() == 4);
  CHECK(q.graph.edges() == c4.edges());
}

TEST_CASE("connected_components") {
  Graph two = Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});

  CHECK(connected_components(Graph()).empty());

  auto one = connected_components(cycle_on({0, 1, 2, 3, 4}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 5);
}

TEST_CASE("bipartition examples") {
  Graph c4 = cycle_on({0, 1, 2, 3});
  Bipartition b4 = bipartition(c4);
  REQUIRE(b4.ok());
  CHECK(b4.color(0) == 0);
  CHECK(b4.color(1) == 1);
  CHECK(b4.color(2) == 0);
  CHECK(b4.color(3) == 1);

  Graph c5 = cycle_on({0, 1, 2, 3, 4});
  Bipartition b5 = bipartition(c5);
  CHECK(!b5.ok());
  REQUIRE(b5.odd_cycle.size() == 5);
  // the witness must really be an odd closed walk in the graph
  for (size_t i = 0; i < b5.odd_cycle.size(); ++i)
    CHECK(c5.has_edge(b5.odd_cycle[i], b5.odd_cycle[(i + 1) % b5.odd_cycle.size()]));

  Graph k4 = complete_on({1, 2, 3, 4});
  CHECK(!bipartition(k4).ok());
  CHECK(!oracle::two_colorable(k4));  // brute-force confirmation
}

TEST_CASE("bipartition agrees with the exhaustive oracle on random graphs") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_graph(10, 0.3, 900 + seed);
    Bipartition b = bipartition(g);
    if (b.ok()) {
      for (const auto& [u, v] : g.edges()) CHECK(b.color(u) != b.color(v));
      CHECK(oracle::two_colorable(g));
    } else {
      CHECK(!oracle::two_colorable(g));
      CHECK(b.odd_cycle.size() % 2 == 1);
      for (size_t i = 0; i < b.odd_cycle.size(); ++i)
        CHECK(g.has_edge(b.odd_cycle[i], b.odd_cycle[(i + 1) % b.odd_cycle.size()]));
    }
  }
}

TEST_CASE("contract invariants on random graphs") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    Graph g = oracle::random_graph(6 + static_cast<int>(rng.below(20)), 0.2, 7000 + seed);
    std::vector<int> x = rng.sample(g.vertices(), rng.below(g.num_vertices() + 1));
    QuotientGraph q = contract(g, x);

    // preimages partition V
    std::vector<int> all;
    for (const auto& [rep, pre] : q.preimage) {
      (void)rep;
      all.insert(all.end(), pre.begin(), pre.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == g.vertices());

    // preimages of size > 1 induce connected subgraphs inside the contracted set
    for (const auto& [rep, pre] : q.preimage) {
      CHECK(rep == pre.front());  // quotient id = minimum preimage id
      if (pre.size() > 1) {
        for (int v : pre)
          CHECK(std::binary_search(q.contracted_set.begin(), q.contracted_set.end(), v));
        CHECK(oracle::components(induced_subgraph(g, pre)).size() == 1);
      }
    }

    // every quotient edge has an original crossing edge, and vice versa
    for (const auto& [a, b] : q.graph.edges()) {
      bool crossing = false;
      for (int u : q.preimage.at(a))
        for (int v : q.preimage.at(b))
          if (g.has_edge(u, v)) crossing = true;
      CHECK(crossing);
    }
    for (const auto& [u, v] : g.edges()) {
      int a = q.image.at(u), b = q.image.at(v);
      if (a != b) CHECK(q.graph.has_edge(a, b));
    }
  }
}

TEST_CASE("bipartition is invariant under relabeling up to the canonical flip") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(3000 + seed);
    int na = 3 + static_cast<int>(rng.below(4));
    int nb = 3 + static_cast<int>(rng.below(4));
    std::vector<int> verts;
    std::vector<Edge> edges;
    for (int i = 0; i < na + nb; ++i) verts.push_back(i);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b)
        if (rng.below(100) < 45) edges.push_back(make_edge(a, na + b));
    Graph g = Graph::from_edges(verts, edges);

    std::vector<int> perm = verts;
    rng.shuffle(perm);
    std::vector<Edge> mapped;
    for (const auto& [u, v] : g.edges()) mapped.push_back(make_edge(perm[u], perm[v]));
    Graph h = Graph::from_edges(verts, mapped);

    Bipartition bg = bipartition(g);
    Bipartition bh = bipartition(h);
    REQUIRE(bg.ok());
    REQUIRE(bh.ok());
    // per component, the relabeled coloring is the original or its flip, and
    // the canonical rule pins which one
    for (const auto& comp : connected_components(g)) {
      int flip = -1;
      for (int v : comp) {
        int want = bh.color(perm[v]);
        int have = bg.color(v);
        if (flip < 0)
          flip = want ^ have;
        else
          CHECK(flip == (want ^ have));
      }
      int min_mapped = perm[comp[0]];
      for (int v : comp) min_mapped = std::min(min_mapped, perm[v]);
      CHECK(bh.color(min_mapped) == 0);
    }
  }
}

TEST_CASE("apex set carried through subgraph and quotient") {
  Graph g = Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {3});
  CHECK(g.apex_set() == std::vector<int>{3});
  CHECK(g.without_apices().num_vertices() == 3);
  Graph sub = induced_subgraph(g, {2, 3});
  CHECK(sub.apex_set() == std::vector<int>{3});
  QuotientGraph q = contract(g, {0, 1});
  CHECK(q.graph.apex_set() == std::vector<int>{3});
}
