// Command-line front end: graph generation, embedding/layer inspection,
// contraction-decomposition reports, OCT/EB solving, and the invariant
// verification harness. JSON goes to stdout; human-readable notes to stderr.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "baker/contraction.hpp"
#include "baker/corpus.hpp"
#include "baker/io.hpp"
#include "baker/solver.hpp"
#include "baker/verify.hpp"

namespace {

using namespace baker;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

GeneratedGraph run_generate(const std::string& kind, int rows, int cols, int n, int edges,
                            int chords, uint64_t seed) {
  if (kind == "grid") return gen_grid(rows, cols);
  if (kind == "cycle") return gen_cycle(n);
  if (kind == "random-planar") return gen_random_planar(n, edges > 0 ? edges : 2 * n, seed);
  if (kind == "grid-with-chords") return gen_grid_with_chords(rows, cols, chords, seed);
  throw InputError("unknown generator kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contraction-decomposition toolkit for planar OCT/EB"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit wall-clock fields from JSON output");

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph file");
  std::string gen_kind = "grid", gen_out;
  int gen_rows = 4, gen_cols = 4, gen_n = 16, gen_edges = 0, gen_chords = 2;
  uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "grid|cycle|random-planar|grid-with-chords");
  gen->add_option("--rows", gen_rows);
  gen->add_option("--cols", gen_cols);
  gen->add_option("--n", gen_n);
  gen->add_option("--edges", gen_edges, "target edge count (random-planar)");
  gen->add_option("--chords", gen_chords);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // faces
  auto* faces = app.add_subcommand("faces", "print the face table of the embedding");
  std::string faces_in;
  faces->add_option("--input", faces_in)->required();

  // layers
  auto* layers = app.add_subcommand("layers", "print layers, residues and Z sets");
  std::string layers_in;
  int layers_p = 2;
  layers->add_option("--input", layers_in)->required();
  layers->add_option("--p", layers_p, "number of contraction sets");

  // decompose
  auto* dec = app.add_subcommand("decompose", "quotient widths for one p");
  std::string dec_in, dec_td_out;
  int dec_p = 2, dec_zmax = 2;
  uint64_t dec_seed = 1;
  dec->add_option("--input", dec_in)->required();
  dec->add_option("--p", dec_p);
  dec->add_option("--zprime-size", dec_zmax, "largest sampled |Z'|");
  dec->add_option("--seed", dec_seed);

  // treewidth-report
  auto* twr = app.add_subcommand("treewidth-report", "width/(p+|Z'|+1) across p values");
  std::string twr_in;
  int twr_pmin = 2, twr_pmax = 4, twr_zmax = 3;
  double twr_cap = 12.0;
  uint64_t twr_seed = 1;
  twr->add_option("--input", twr_in)->required();
  twr->add_option("--pmin", twr_pmin);
  twr->add_option("--pmax", twr_pmax);
  twr->add_option("--zmax", twr_zmax);
  twr->add_option("--cap", twr_cap, "asserted width / (p+|Z'|+1) cap");
  twr->add_option("--seed", twr_seed);

  // treedec
  auto* tdc = app.add_subcommand("treedec", "heuristic tree decomposition (PACE-style text)");
  std::string tdc_in, tdc_out;
  tdc->add_option("--input", tdc_in)->required();
  tdc->add_option("--out", tdc_out, "write the decomposition here (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve OCT or EB");
  std::string solve_in, solve_problem = "oct", solve_engine = "baker";
  int solve_k = 0, solve_threads = 1, solve_p = 0;
  solve->add_option("--input", solve_in)->required();
  solve->add_option("--problem", solve_problem, "oct|eb");
  solve->add_option("--k", solve_k)->required();
  solve->add_option("--engine", solve_engine, "baker|dp|brute");
  solve->add_option("--threads", solve_threads);
  solve->add_option("--p", solve_p, "override p (default floor(sqrt(k)))");

  // verify
  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  VerifyConfig vcfg;
  ver->add_option("--seed", vcfg.seed);
  ver->add_option("--count", vcfg.layering_count, "random layering graphs");
  ver->add_option("--max-n", vcfg.layering_max_n);
  ver->add_option("--solver-count", vcfg.solver_count);
  ver->add_option("--threads", vcfg.threads);
  ver->add_option("--cap", vcfg.width_cap, "width ratio cap C");
  ver->add_option("--deepface-a", vcfg.deepface_a, "deep-face cap slope a");
  ver->add_option("--deepface-b", vcfg.deepface_b, "deep-face cap offset b");
  ver->add_option("--slope-cap", vcfg.diam_slope_cap);
  ver->add_flag("--empty", vcfg.empty_corpus, "run with an empty corpus");
  ver->add_flag("--inject-invalid-td", vcfg.inject_invalid_fixture,
                "inject a corrupted decomposition fixture (must be detected)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GeneratedGraph gg = run_generate(gen_kind, gen_rows, gen_cols, gen_n, gen_edges,
                                       gen_chords, gen_seed);
      if (gen_out.empty()) {
        write_graph_file(std::cout, gg.graph, &gg.rotation);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw InputError("cannot write " + gen_out);
        write_graph_file(out, gg.graph, &gg.rotation);
        std::cerr << "wrote " << gg.graph.num_vertices() << " vertices, "
                  << gg.graph.num_edges() << " edges to " << gen_out << "\n";
      }
      return 0;
    }

    if (*faces) {
      GraphFile gf = read_graph_file(faces_in);
      auto embeddings = embeddings_for(gf);
      if (embeddings.size() != 1)
        throw InputError("faces: apex-free part must be connected");
      emit(faces_json(embeddings[0]));
      return 0;
    }

    if (*layers) {
      GraphFile gf = read_graph_file(layers_in);
      emit(layers_json(embeddings_for(gf), layers_p));
      return 0;
    }

    if (*dec) {
      GraphFile gf = read_graph_file(dec_in);
      auto embeddings = embeddings_for(gf);
      PlanarDecomposition d = build_layer_sets_multi(embeddings, dec_p);
      WidthReport report = treewidth_bound_report(gf.graph, d.sets, d.plan, dec_zmax, dec_seed);
      emit(decompose_json(report));
      return 0;
    }

    if (*twr) {
      GraphFile gf = read_graph_file(twr_in);
      auto embeddings = embeddings_for(gf);
      Json out;
      out["rows"] = Json::array();
      double max_ratio = 0;
      for (int p = twr_pmin; p <= twr_pmax; ++p) {
        PlanarDecomposition d = build_layer_sets_multi(embeddings, p);
        WidthReport report = treewidth_bound_report(gf.graph, d.sets, d.plan, twr_zmax, twr_seed);
        for (const auto& s : report.samples) {
          Json row;
          row["p"] = p;
          row["i"] = s.i;
          row["zprime"] = s.z_prime;
          row["width"] = s.width;
          row["ratio"] = s.ratio;
          out["rows"].push_back(std::move(row));
        }
        max_ratio = std::max(max_ratio, report.max_ratio);
      }
      out["max_ratio"] = max_ratio;
      out["cap"] = twr_cap;
      out["pass"] = max_ratio <= twr_cap;
      emit(out);
      return out["pass"].get<bool>() ? 0 : 2;
    }

    if (*tdc) {
      GraphFile gf = read_graph_file(tdc_in);
      TreeDecomposition td = heuristic_decompose(gf.graph.without_apices());
      td = add_apices(td, gf.graph.apex_set());
      if (!validate(td, gf.graph)) throw StructureError("internal: invalid decomposition");
      if (tdc_out.empty()) {
        write_pace_td(std::cout, td, gf.graph);
      } else {
        std::ofstream out(tdc_out);
        if (!out) throw InputError("cannot write " + tdc_out);
        write_pace_td(out, td, gf.graph);
        Json j;
        j["width"] = td.width();
        j["bags"] = static_cast<int>(td.nodes.size());
        emit(j);
      }
      return 0;
    }

    if (*solve) {
      GraphFile gf = read_graph_file(solve_in);
      Problem problem;
      if (solve_problem == "oct") problem = Problem::OCT;
      else if (solve_problem == "eb") problem = Problem::EB;
      else throw InputError("problem must be oct or eb");
      Instance inst = make_instance(gf.graph, problem, solve_k);
      BakerStats stats;
      std::optional<Solution> sol;
      if (solve_engine == "baker") {
        BakerOptions opts;
        opts.threads = solve_threads;
        opts.p_override = solve_p;
        sol = baker_solve(inst, embeddings_for(gf), opts, &stats);
      } else if (solve_engine == "dp") {
        auto t0 = std::chrono::steady_clock::now();
        NiceTreeDecomposition ntd = to_nice(heuristic_decompose(inst.g));
        stats.max_width = ntd.width();
        sol = dp_solve(inst, ntd);
        stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
      } else if (solve_engine == "brute") {
        auto t0 = std::chrono::steady_clock::now();
        sol = brute_force(inst);
        stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
      } else {
        throw InputError("engine must be baker, dp or brute");
      }
      if (sol && !solution_valid(inst, *sol))
        throw StructureError("internal: solver returned an invalid solution");
      emit(solve_json(inst, sol, stats, !no_timing));
      std::cerr << (sol ? "feasible, size " + std::to_string(sol->size())
                        : std::string("infeasible within budget"))
                << "\n";
      return 0;
    }

    if (*ver) {
      VerifyResult res = run_verify(vcfg);
      emit(res.report);
      for (const auto& suite : res.report["suites"])
        std::cerr << (suite["pass"].get<bool>() ? "[ ok ] " : "[FAIL] ")
                  << suite["name"].get<std::string>() << "\n";
      return res.pass ? 0 : 2;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
