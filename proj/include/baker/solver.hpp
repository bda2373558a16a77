#pragma once

#include <array>
#include <functional>
#include <optional>

#include "baker/embedding.hpp"
#include "baker/graph.hpp"
#include "baker/layering.hpp"
#include "baker/treedec.hpp"

namespace baker {

enum class Problem { OCT, EB };

/// Deletion problem instance. Only deletions inside the candidate set are
/// allowed; the trivial candidate (everything) is always correct.
struct Instance {
  Graph g;
  Problem problem = Problem::OCT;
  int k = 0;
  std::vector<int> cand_vertices;  // sorted; used by OCT
  std::vector<Edge> cand_edges;    // sorted; used by EB
};

/// Fills the candidate with all vertices (OCT) or all edges (EB).
void set_trivial_candidate(Instance& inst);

Instance make_instance(Graph g, Problem problem, int k);

struct Solution {
  std::vector<int> vertices;  // sorted; OCT deletions
  std::vector<Edge> edges;    // sorted; EB deletions
  int size() const { return static_cast<int>(vertices.size() + edges.size()); }
};

/// Checks that removing the solution leaves a bipartite graph and that it
/// respects the candidate set.
bool solution_valid(const Instance& inst, const Solution& s);

/// Per-original-vertex state restrictions used when apices are branched over
/// outside the planar DP.
struct UnaryConstraints {
  std::unordered_map<int, int> allowed_mask;  // vertex -> bitmask over sides {0,1}; default 3
  struct EbExtra {
    bool feasible = true;
    int cost = 0;
    std::vector<Edge> edges;
  };
  // vertex -> per-side cost of the apex edges it must cut
  std::unordered_map<int, std::array<EbExtra, 2>> eb_extra;
};

/// Standard nice-decomposition DP; all vertices free. Returns the minimum
/// solution of size <= k (deterministic: lexicographically smallest deleted
/// set among the minima), or nullopt.
std::optional<Solution> dp_solve(const Instance& inst, const NiceTreeDecomposition& ntd);

/// Contraction-aware DP on a quotient graph: each contracted component keeps
/// its two bipartition orientations and can never be deleted; for EB the
/// edges inside contracted components can never be deleted. `ntd` must be
/// valid for q.graph. Returns nullopt immediately when the contracted part is
/// not bipartite. Deletions are reported in original ids. `budget` overrides
/// inst.k when non-negative.
std::optional<Solution> dp_solve_contracted(const Instance& inst, const QuotientGraph& q,
                                            const NiceTreeDecomposition& ntd,
                                            const UnaryConstraints* unary = nullptr,
                                            int budget = -1);

/// The pair family Pi: p = floor(sqrt(k)) (min 1), Z' ranges over subsets of
/// Z_i intersected with the candidate vertices, capped at k/p (vertex
/// problems) or 2k/p (edge problems).
struct BakerPlan {
  int p = 1;
  int cap = 0;
  std::vector<std::vector<int>> zcand;  // per i, sorted
  long long pair_count() const;
  /// All pairs, ascending i, ascending |Z'|, lexicographic Z'.
  void for_each_pair(const std::function<void(int, const std::vector<int>&)>& f) const;
};

BakerPlan make_baker_plan(const Instance& inst, const LayerSets& sets, int p);

struct BakerOptions {
  int threads = 1;
  int p_override = 0;  // 0 = floor(sqrt(k)), min 1
};

struct BakerStats {
  long long pairs_total = 0;   // size of Pi
  long long pairs_solved = 0;  // pairs whose contracted part was bipartite
  long long apex_combos = 1;
  int max_width = -1;  // largest quotient decomposition width seen
  double wall_ms = 0;
};

/// Baker enumeration over (i, Z') with contraction-aware DP per pair. The
/// embeddings cover the connected components of the apex-free part. Exact:
/// feasibility and optimal size match brute force. The reduction over pairs
/// (minimum size, then lexicographic deleted set) is order-independent, so
/// threaded runs return the same Solution.
std::optional<Solution> baker_solve(const Instance& inst,
                                    const std::vector<Embedding>& embeddings,
                                    const BakerOptions& opts = {}, BakerStats* stats = nullptr);

/// Convenience overload: embeds the apex-free components itself.
std::optional<Solution> baker_solve(const Instance& inst, const BakerOptions& opts = {},
                                    BakerStats* stats = nullptr);

/// Exhaustive oracle: subsets of the candidate in ascending size then
/// lexicographic order. Practical for |candidate| <= ~30 and small k.
std::optional<Solution> brute_force(const Instance& inst);

}  // namespace baker
