#include <sstream>

#include "doctest.h"

#include "baker/corpus.hpp"
#include "baker/generate.hpp"
#include "baker/io.hpp"

using namespace baker;

TEST_CASE("graph file round trip") {
  GeneratedGraph gg = gen_grid_with_chords(3, 4, 2, 5);
  std::stringstream ss;
  write_graph_file(ss, gg.graph, &gg.rotation);
  GraphFile gf = read_graph_file(ss);
  CHECK(gf.graph.vertices() == gg.graph.vertices());
  CHECK(gf.graph.edges() == gg.graph.edges());
  REQUIRE(gf.rotation.has_value());
  CHECK(*gf.rotation == gg.rotation);
}

TEST_CASE("graph file with apex and marked faces") {
  std::stringstream in(
      "# a 4-cycle with an apex\n"
      "5 8\n"
      "0 1\n1 2\n2 3\n0 3\n"
      "4 0\n4 1\n4 2\n4 3\n"
      "apex: 4\n"
      "rot 0 : 1 3\nrot 1 : 0 2\nrot 2 : 1 3\nrot 3 : 2 0\n"
      "marked_faces: 1\n");
  GraphFile gf = read_graph_file(in);
  CHECK(gf.graph.num_vertices() == 5);
  CHECK(gf.graph.apex_set() == std::vector<int>{4});
  auto embeddings = embeddings_for(gf);
  REQUIRE(embeddings.size() == 1);
  CHECK(embeddings[0].graph().num_vertices() == 4);  // apex-free part
  CHECK(embeddings[0].marked_faces() == std::vector<int>{1});
}

TEST_CASE("graph file errors") {
  std::stringstream empty("");
  CHECK_THROWS_AS(read_graph_file(empty), InputError);
  std::stringstream bad_edge("2 1\n0 5\n");
  CHECK_THROWS_AS(read_graph_file(bad_edge), InputError);
  std::stringstream bad_directive("2 1\n0 1\nwhat: 3\n");
  CHECK_THROWS_AS(read_graph_file(bad_directive), InputError);
}

TEST_CASE("embeddings_for splits disconnected inputs") {
  std::stringstream in("6 4\n0 1\n1 2\n3 4\n4 5\n");
  GraphFile gf = read_graph_file(in);
  auto embeddings = embeddings_for(gf);
  CHECK(embeddings.size() == 2);
}

TEST_CASE("pace td output shape") {
  Graph g = gen_grid(2, 3).graph;
  TreeDecomposition td = heuristic_decompose(g);
  std::stringstream ss;
  write_pace_td(ss, td, g);
  std::string header;
  std::getline(ss, header);
  std::stringstream hs(header);
  std::string s, tdword;
  int bags, width1, n;
  hs >> s >> tdword >> bags >> width1 >> n;
  CHECK(s == "s");
  CHECK(tdword == "td");
  CHECK(bags == static_cast<int>(td.nodes.size()));
  CHECK(width1 == td.width() + 1);
  CHECK(n == g.num_vertices());
  int b_lines = 0, edge_lines = 0;
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("b ", 0) == 0)
      ++b_lines;
    else if (!line.empty())
      ++edge_lines;
  }
  CHECK(b_lines == bags);
  CHECK(edge_lines == bags - 1);
}

TEST_CASE("json reports are stable and shaped as documented") {
  GeneratedGraph gg = gen_grid(4, 4);
  Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);

  Json f = faces_json(e);
  CHECK(f.contains("faces"));
  CHECK(f.contains("outer"));
  CHECK(f["faces"].size() == static_cast<size_t>(e.num_faces()));
  CHECK(f["faces"][0].contains("id"));
  CHECK(f["faces"][0].contains("boundary"));
  CHECK(f["faces"][0].contains("marked"));

  Json l1 = layers_json({e}, 2);
  Json l2 = layers_json({e}, 2);
  CHECK(l1.dump() == l2.dump());
  CHECK(l1["m"] == 2);
  CHECK(l1["layers"].size() == 2);
  CHECK(l1["Z"].size() == 2);

  Instance inst = make_instance(gg.graph, Problem::OCT, 1);
  BakerStats stats;
  auto sol = baker_solve(inst, {e}, {}, &stats);
  Json s1 = solve_json(inst, sol, stats, false);
  CHECK(s1["feasible"] == true);
  CHECK(s1["size"] == 0);
  CHECK(!s1["stats"].contains("wall_ms"));
  Json s2 = solve_json(inst, sol, stats, true);
  CHECK(s2["stats"].contains("wall_ms"));
}

TEST_CASE("infeasible solve reports null size") {
  Graph c3 = gen_cycle(3).graph;
  Instance inst = make_instance(c3, Problem::OCT, 0);
  BakerStats stats;
  auto sol = baker_solve(inst, {embed_planar(c3)}, {}, &stats);
  CHECK(!sol.has_value());
  Json j = solve_json(inst, sol, stats, false);
  CHECK(j["feasible"] == false);
  CHECK(j["size"].is_null());
  CHECK(j["deleted"].empty());
}
