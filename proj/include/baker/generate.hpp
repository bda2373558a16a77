#pragma once

#include <cstdint>
#include <map>

#include "baker/graph.hpp"

namespace baker {

/// Generator output: a planar graph together with a rotation system that is
/// planar by construction.
struct GeneratedGraph {
  Graph graph;
  std::map<int, std::vector<int>> rotation;
};

/// rows x cols grid; vertex (r,c) has id r*cols + c.
GeneratedGraph gen_grid(int rows, int cols);

/// Cycle on n >= 3 vertices (n == 1 gives the single-vertex graph).
GeneratedGraph gen_cycle(int n);

/// Random planar graph: random stacked triangulation (each new vertex is
/// placed inside a random face and joined to its corners), then random edge
/// deletions down to target_edges while a spanning tree keeps it connected.
GeneratedGraph gen_random_planar(int n, int target_edges, uint64_t seed);

/// Grid plus random diagonal chords inside distinct cells; chords make odd
/// faces, so these are natural OCT/EB test inputs.
GeneratedGraph gen_grid_with_chords(int rows, int cols, int chords, uint64_t seed);

}  // namespace baker
