#pragma once

#include <string>

#include "baker/embedding.hpp"
#include "baker/generate.hpp"

namespace baker {

/// One deterministic test graph; marked faces (if any) are sampled from the
/// non-outer faces after the embedding is built.
struct CorpusItem {
  std::string name;
  GeneratedGraph gg;
  int marked_count = 0;
  uint64_t marked_seed = 0;
};

Embedding corpus_embedding(const CorpusItem& item);

/// Mixed small graphs (n <= 60) used by the exhaustive suites.
std::vector<CorpusItem> small_corpus();

/// Seeded random planar graphs for the layering suite.
std::vector<CorpusItem> layering_corpus(int count, int max_n, uint64_t seed);

/// Planar solver instances: n <= 18, k <= 3.
struct SolverCase {
  std::string name;
  GeneratedGraph gg;
  int k = 0;
};

std::vector<SolverCase> solver_corpus(int count, uint64_t seed);

}  // namespace baker
