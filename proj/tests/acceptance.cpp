// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Scales and tolerances are pinned here:
//   1. baker_solve == brute force (feasibility and optimal size) on >= 300
//      seeded planar instances, n <= 18, k <= 3, OCT and EB. Exact.
//   2. layering invariants on >= 500 random planar graphs, n <= 200. Exact.
//   3. support-tree properties on every corpus graph with n <= 60. Exact.
//   4. heuristic width of G/(Z_i\Z') <= 12*(p+|Z'|+1) on 10x10..30x30 grids
//      and random planar graphs up to n = 2000, p in 2..8, |Z'| in 0..6.
//   5. every deep face meets <= 4*|Z'| + 4 components; maxima reported.
//   6. zero-weight weighted diameter == unweighted VFI diameter (n <= 20),
//      against an exhaustive BFS oracle. Exact.
//   7. every decomposition validates; to_nice preserves width and validity.
//   8. threads 1 vs 8 produce identical solutions and reports. Exact.

#include <cstdio>
#include <string>

#include "baker/verify.hpp"

using namespace baker;

namespace {

int failures = 0;

void report(int idx, const std::string& name, const SuiteResult& r,
            const std::string& extra = "") {
  if (!r.pass) ++failures;
  std::printf("[%s] criterion %d: %s%s\n", r.pass ? "PASS" : "FAIL", idx, name.c_str(),
              extra.empty() ? "" : (" (" + extra + ")").c_str());
  if (!r.pass && r.report.contains("first_failures"))
    for (const auto& f : r.report["first_failures"])
      std::printf("       %s\n", f.get<std::string>().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const uint64_t seed = 42;
  auto items = small_corpus();

  {
    SuiteResult r = suite_oracle_equivalence(300, seed, 4);
    report(1, "oracle equivalence, 300 instances x {OCT,EB}", r,
           "feasible=" + r.report["feasible"].dump() +
               " infeasible=" + r.report["infeasible"].dump());
  }
  {
    SuiteResult r = suite_layering(500, 200, seed);
    report(2, "layering invariants, 500 random planar graphs", r,
           "max_m=" + r.report["max_m"].dump());
  }
  {
    SuiteResult r = suite_support_tree(items, seed);
    report(3, "support-tree invariants on the n<=60 corpus", r,
           "trees=" + r.report["trees"].dump());
  }
  {
    WidthScalingConfig cfg;
    cfg.grid_sizes = {10, 15, 20, 25, 30};
    cfg.chorded_grid_sizes = {25, 45};  // up to ~2000 vertices, width well beyond 3
    cfg.random_sizes = {500, 1000, 2000};
    cfg.p_values = {2, 3, 4, 5, 6, 7, 8};
    cfg.zprime_sizes = {0, 3, 6};
    cfg.cap = 12.0;
    cfg.seed = seed;
    SuiteResult r = suite_width_scaling(cfg);
    report(4, "contraction width <= 12*(p+|Z'|+1)", r,
           "samples=" + r.report["samples"].dump() +
               " max_ratio=" + r.report["max_width_ratio"].dump());
  }
  {
    SuiteResult r = suite_deepface(items, 4, 4, seed);
    report(5, "deep faces meet <= 4|Z'|+4 components", r,
           "deep_faces=" + r.report["deep_faces"].dump() +
               " max_components=" + r.report["max_components_per_deep_face"].dump());
  }
  {
    SuiteResult r = suite_weighted_diameter(items, 20, 8.0, seed);
    report(6, "zero-weight diameter == unweighted diameter (n<=20)", r,
           "checks=" + r.report["zero_weight_checks"].dump() +
               " slope=" + r.report["regression_slope"].dump());
  }
  {
    SuiteResult r = suite_decomposition_validity(items, false);
    report(7, "decomposition validity and nice-form preservation", r,
           "decomposed=" + r.report["decomposed"].dump());
  }
  {
    SuiteResult r = suite_determinism(8, seed);
    report(8, "determinism across thread counts", r,
           "instances=" + r.report["instances"].dump());
  }

  return failures;
}
