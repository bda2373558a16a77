#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "baker/contraction.hpp"
#include "baker/embedding.hpp"
#include "baker/graph.hpp"
#include "baker/layering.hpp"
#include "baker/solver.hpp"
#include "baker/treedec.hpp"

namespace baker {

using Json = nlohmann::ordered_json;

/// Parsed graph file:
///   n m
///   u v                (m lines, ids in [0, n))
///   apex: a1 a2 ...    (optional)
///   rot u: v1 v2 ...   (optional, one line per vertex)
///   marked_faces: ...  (optional, face ids in deterministic tracing order)
/// Blank lines and lines starting with '#' are ignored.
struct GraphFile {
  Graph graph;
  std::optional<std::map<int, std::vector<int>>> rotation;
  std::vector<int> marked_faces;
};

GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph_file(std::ostream& out, const Graph& g,
                      const std::map<int, std::vector<int>>* rotation = nullptr,
                      const std::vector<int>* marked_faces = nullptr);

/// PACE-style decomposition text: header `s td <bags> <width+1> <n>`, bag
/// lines `b <id> v...` (1-based bag ids), then tree edges `<id1> <id2>`.
void write_pace_td(std::ostream& out, const TreeDecomposition& td, const Graph& g);

/// Embeddings of the apex-free part of the graph, one per connected
/// component. A rotation block, when present, requires a connected apex-free
/// part. Marked faces are applied afterwards.
std::vector<Embedding> embeddings_for(const GraphFile& gf);

// JSON report builders shared by the CLI and the determinism tests.
Json faces_json(const Embedding& e);
Json layers_json(const std::vector<Embedding>& embeddings, int p);
Json decompose_json(const WidthReport& report);
Json solve_json(const Instance& inst, const std::optional<Solution>& sol,
                const BakerStats& stats, bool include_timing);

}  // namespace baker
