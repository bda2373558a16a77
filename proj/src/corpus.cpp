#include "baker/corpus.hpp"

#include <algorithm>

#include "baker/util.hpp"

namespace baker {

Embedding corpus_embedding(const CorpusItem& item) {
  Embedding e = Embedding::from_rotation(item.gg.graph, item.gg.rotation);
  if (item.marked_count > 0 && e.num_faces() > 1) {
    Rng rng(item.marked_seed);
    std::vector<int> pool;
    for (const auto& f : e.faces())
      if (f.id != e.outer_face()) pool.push_back(f.id);
    e.set_marked_faces(rng.sample(pool, std::min<size_t>(item.marked_count, pool.size())));
  }
  return e;
}

std::vector<CorpusItem> small_corpus() {
  std::vector<CorpusItem> items;
  auto add = [&](std::string name, GeneratedGraph gg, int marked = 0, uint64_t mseed = 0) {
    items.push_back({std::move(name), std::move(gg), marked, mseed});
  };
  add("single-vertex", gen_cycle(1));
  add("path-5", gen_grid(1, 5));
  for (int n : {3, 4, 5, 6, 7, 8}) add("cycle-" + std::to_string(n), gen_cycle(n));
  for (int s : {2, 3, 4, 5, 6, 7}) add("grid-" + std::to_string(s), gen_grid(s, s));
  add("grid-3x6", gen_grid(3, 6));
  add("k4", gen_random_planar(4, 6, 11));
  add("chords-4x4", gen_grid_with_chords(4, 4, 2, 21));
  add("chords-5x5", gen_grid_with_chords(5, 5, 4, 22));
  for (int i = 0; i < 10; ++i) {
    int n = 8 + 5 * i;
    add("rand-" + std::to_string(n), gen_random_planar(n, n + i, 100 + i));
  }
  add("rand-marked-20", gen_random_planar(20, 30, 200), 1, 201);
  add("rand-marked-30", gen_random_planar(30, 45, 210), 2, 211);
  add("grid-marked-5", gen_grid(5, 5), 1, 220);
  add("grid-marked-6", gen_grid(6, 6), 2, 221);
  return items;
}

std::vector<CorpusItem> layering_corpus(int count, int max_n, uint64_t seed) {
  std::vector<CorpusItem> items;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed * 1000003 + i);
    int n = 4 + static_cast<int>(rng.below(std::max(1, max_n - 3)));
    int max_m = 3 * n - 6;
    int target = n - 1 + static_cast<int>(rng.below(std::max(1, max_m - n + 2)));
    CorpusItem item;
    item.name = "layer-" + std::to_string(i);
    item.gg = gen_random_planar(n, target, seed * 7919 + i);
    if (i % 5 == 0) {
      item.marked_count = 1 + static_cast<int>(rng.below(2));
      item.marked_seed = seed * 31 + i;
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<SolverCase> solver_corpus(int count, uint64_t seed) {
  std::vector<SolverCase> cases;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed * 2654435761 + i);
    SolverCase c;
    c.name = "solve-" + std::to_string(i);
    c.k = static_cast<int>(rng.below(4));
    if (i % 7 == 3) {
      int s = 3 + static_cast<int>(rng.below(2));
      c.gg = gen_grid_with_chords(s, s, 1 + static_cast<int>(rng.below(3)),
                                  seed * 104729 + i);
    } else {
      int n = 6 + static_cast<int>(rng.below(13));
      int target = n - 1 + static_cast<int>(rng.below(n));
      c.gg = gen_random_planar(n, target, seed * 104729 + i);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace baker
