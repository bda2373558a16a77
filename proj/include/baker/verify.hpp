#pragma once

#include <cstdint>

#include "baker/corpus.hpp"
#include "baker/io.hpp"

namespace baker {

/// One invariant suite outcome: machine-readable details plus pass flag.
struct SuiteResult {
  Json report;
  bool pass = true;
};

/// Layer partition, the one-step layer difference on edges, and the
/// congruence-class structure of the Z sets, over seeded random planar graphs.
SuiteResult suite_layering(int count, int max_n, uint64_t seed);

/// Every vertex of L_i touches the outer face of the subgraph induced by the
/// layers >= i, and no deeper vertex does.
SuiteResult suite_sameface(const std::vector<CorpusItem>& items);

/// The three support-tree properties (partition, component containment,
/// parent-child adjacency), exhaustively.
SuiteResult suite_support_tree(const std::vector<CorpusItem>& items, uint64_t seed);

/// Deep-face component caps: every deep face meets <= a*|Z'| + b components
/// of g[Z_i \ Z']. Reports observed maxima.
SuiteResult suite_deepface(const std::vector<CorpusItem>& items, int a, int b, uint64_t seed);

/// Zero-weight weighted diameter equals the unweighted VFI diameter (against
/// an independent BFS oracle), and annulus diameters grow at most linearly in
/// p' + |Z'| + 1 (least-squares slope cap).
SuiteResult suite_weighted_diameter(const std::vector<CorpusItem>& items, int max_n_exact,
                                    double slope_cap, uint64_t seed);

/// Heuristic width of quotients stays within cap * (p + |Z'| + 1).
struct WidthScalingConfig {
  std::vector<int> grid_sizes{10, 15, 20};
  std::vector<int> chorded_grid_sizes{};  // side length; chords = side*side/8
  std::vector<int> random_sizes{200, 500};
  std::vector<int> p_values{2, 3, 4, 5, 6, 7, 8};
  std::vector<int> zprime_sizes{0, 3, 6};
  double cap = 12.0;
  uint64_t seed = 1;
};
SuiteResult suite_width_scaling(const WidthScalingConfig& cfg);

/// baker_solve vs brute force on random planar instances, both problems.
SuiteResult suite_oracle_equivalence(int count, uint64_t seed, int threads);

/// Every heuristic decomposition validates; to_nice preserves width and
/// validity. Optionally injects a constructed invalid fixture (expected to
/// fail; used to test the failure path).
SuiteResult suite_decomposition_validity(const std::vector<CorpusItem>& items,
                                         bool inject_invalid_fixture);

/// Same seeds, threads 1 vs 8: identical solutions and identical reports
/// (timing excluded).
SuiteResult suite_determinism(int count, uint64_t seed);

struct VerifyConfig {
  uint64_t seed = 1;
  int layering_count = 120;
  int layering_max_n = 200;
  int solver_count = 60;
  int determinism_count = 8;
  int threads = 4;
  double width_cap = 12.0;
  int deepface_a = 4;
  int deepface_b = 4;
  double diam_slope_cap = 8.0;
  bool empty_corpus = false;            // run no suites, succeed trivially
  bool inject_invalid_fixture = false;  // force a validation failure
};

struct VerifyResult {
  Json report;
  bool pass = true;
};

VerifyResult run_verify(const VerifyConfig& cfg);

}  // namespace baker
