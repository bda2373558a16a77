#include "baker/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "baker/contraction.hpp"
#include "baker/util.hpp"

namespace baker {

namespace {

struct Failures {
  int count = 0;
  std::vector<std::string> first;
  void add(const std::string& msg) {
    ++count;
    if (first.size() < 8) first.push_back(msg);
  }
  void finish(SuiteResult& r) const {
    r.pass = r.pass && count == 0;
    r.report["failures"] = count;
    if (!first.empty()) r.report["first_failures"] = first;
  }
};

// Independent BFS oracle over the raw vertex/face incidence lists.
int vfi_bfs_diameter(const Embedding& e) {
  std::vector<int> vids = e.graph().vertices();
  const int nv = static_cast<int>(vids.size());
  const int n = nv + e.num_faces();
  std::vector<std::vector<int>> adj(n);
  auto vidx = [&](int v) {
    return static_cast<int>(std::lower_bound(vids.begin(), vids.end(), v) - vids.begin());
  };
  for (const auto& f : e.faces())
    for (int v : f.boundary_vertices) {
      adj[vidx(v)].push_back(nv + f.id);
      adj[nv + f.id].push_back(vidx(v));
    }
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      best = std::max(best, dist[x]);
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
  }
  return best;
}

}  // namespace

SuiteResult suite_layering(int count, int max_n, uint64_t seed) {
  SuiteResult r;
  Failures fails;
  auto items = layering_corpus(count, max_n, seed);
  int max_m = 0;
  long long edges_checked = 0;
  for (const auto& item : items) {
    Embedding e = corpus_embedding(item);
    Layering l = compute_layering(e);
    max_m = std::max(max_m, l.m);

    std::set<int> seen;
    for (int i = 1; i <= l.m; ++i) {
      if (l.layer(i).empty()) fails.add(item.name + ": empty layer inside [1,m]");
      for (int v : l.layer(i)) {
        if (!seen.insert(v).second) fails.add(item.name + ": layers overlap");
        if (l.layer_of(v) != i) fails.add(item.name + ": ell mismatch");
      }
    }
    if (static_cast<int>(seen.size()) != e.graph().num_vertices())
      fails.add(item.name + ": layers do not cover V");

    for (const auto& [u, v] : e.graph().edges()) {
      ++edges_checked;
      if (std::abs(l.layer_of(u) - l.layer_of(v)) > 1)
        fails.add(item.name + ": edge spans more than one layer");
    }

    for (const auto& f : e.faces()) {
      if (!f.marked) continue;
      int lo = l.m + 1, hi = 0;
      for (int v : f.boundary_vertices) {
        lo = std::min(lo, l.layer_of(v));
        hi = std::max(hi, l.layer_of(v));
      }
      if (!f.boundary_vertices.empty() && hi - lo > 1)
        fails.add(item.name + ": marked face hits non-consecutive layers");
    }

    for (int p = 1; p <= 4; ++p) {
      ResiduePlan plan = choose_residues(l.bad_layers, e.num_marked_faces(), p);
      if (plan.p_prime != p + 2 * e.num_marked_faces())
        fails.add(item.name + ": p_prime formula");
      for (int q : plan.good_residues)
        for (int bad : l.bad_layers)
          if ((bad - q) % plan.p_prime == 0)
            fails.add(item.name + ": residue congruent to a bad layer");
      LayerSets sets = build_layer_sets(l, plan);
      std::set<int> zall;
      size_t zsum = 0;
      for (int i = 1; i <= p; ++i) {
        const auto& zi = sets.z[i - 1];
        zsum += zi.size();
        zall.insert(zi.begin(), zi.end());
        std::vector<int> expect;
        for (int j = plan.good_residues[i - 1]; j <= l.m; j += plan.p_prime) {
          const auto& lay = l.layer(j);
          expect.insert(expect.end(), lay.begin(), lay.end());
        }
        std::sort(expect.begin(), expect.end());
        if (expect != zi) fails.add(item.name + ": Z_i != congruence class union");
      }
      if (zall.size() != zsum) fails.add(item.name + ": Z sets not disjoint");
      if (e.num_marked_faces() == 0 && plan.p_prime == p &&
          static_cast<int>(zall.size()) != e.graph().num_vertices())
        fails.add(item.name + ": Z sets do not cover V without bad layers");
      if (plan.p_prime >= 2) {
        // layers of the same Z_i are p' >= 2 apart, hence non-adjacent
        for (int i = 1; i <= p; ++i) {
          const auto& zi = sets.z[i - 1];
          for (int u : zi)
            for (int v : e.graph().neighbors(u))
              if (std::binary_search(zi.begin(), zi.end(), v) &&
                  l.layer_of(u) != l.layer_of(v))
                fails.add(item.name + ": edge between two different layers of Z_i");
        }
      }
    }
  }
  r.report["graphs"] = static_cast<int>(items.size());
  r.report["edges_checked"] = edges_checked;
  r.report["max_m"] = max_m;
  fails.finish(r);
  return r;
}

SuiteResult suite_sameface(const std::vector<CorpusItem>& items) {
  SuiteResult r;
  Failures fails;
  int graphs = 0;
  for (const auto& item : items) {
    if (item.gg.graph.num_vertices() > 60) continue;
    ++graphs;
    Embedding e = corpus_embedding(item);
    Layering l = compute_layering(e);
    for (int i = 1; i <= l.m; ++i) {
      std::vector<int> suffix;
      for (int j = i; j <= l.m; ++j)
        suffix.insert(suffix.end(), l.layer(j).begin(), l.layer(j).end());
      SubgraphFaces sub = subgraph_faces(e, suffix);
      const auto& outer = sub.region_vertices[sub.outer_region];
      for (int v : l.layer(i))
        if (!std::binary_search(outer.begin(), outer.end(), v))
          fails.add(item.name + ": layer " + std::to_string(i) +
                    " vertex off the suffix outer face");
      for (int j = i + 1; j <= l.m; ++j)
        for (int v : l.layer(j))
          if (std::binary_search(outer.begin(), outer.end(), v))
            fails.add(item.name + ": deep vertex on the suffix outer face");
    }
  }
  r.report["graphs"] = graphs;
  fails.finish(r);
  return r;
}

SuiteResult suite_support_tree(const std::vector<CorpusItem>& items, uint64_t seed) {
  SuiteResult r;
  Failures fails;
  int trees = 0;
  for (const auto& item : items) {
    if (item.gg.graph.num_vertices() > 60) continue;
    Embedding e = corpus_embedding(item);
    const Graph& g = e.graph();
    Layering l = compute_layering(e);
    for (int p = 1; p <= 3; ++p) {
      ResiduePlan plan = choose_residues(l.bad_layers, e.num_marked_faces(), p);
      LayerSets sets = build_layer_sets(l, plan);
      for (int i = 1; i <= p; ++i) {
        ++trees;
        SupportTree tree = build_support_tree(e, l, plan, i);

        std::unordered_map<int, int> node_of;
        size_t covered = 0;
        for (size_t t = 0; t < tree.nodes.size(); ++t) {
          const auto& node = tree.nodes[t];
          covered += node.vt.size();
          for (int v : node.vt) {
            if (node_of.count(v)) fails.add(item.name + ": V_t sets overlap");
            node_of[v] = static_cast<int>(t);
            long long lo = tree.level_lower[node.level];
            if (l.layer_of(v) <= lo || l.layer_of(v) > lo + plan.p_prime)
              fails.add(item.name + ": V_t layer slice out of bounds");
          }
        }
        if (covered != static_cast<size_t>(g.num_vertices()))
          fails.add(item.name + ": V_t sets do not partition V");

        // Component containment needs the Z-layers pairwise non-adjacent,
        // which holds exactly when p' >= 2.
        if (plan.p_prime >= 2) {
          Rng rng(seed + trees);
          const auto& zi = sets.z[i - 1];
          for (int zsize : {0, 1, 2}) {
            auto zp = rng.sample(zi, std::min<size_t>(zsize, zi.size()));
            std::vector<int> rest;
            std::set_difference(zi.begin(), zi.end(), zp.begin(), zp.end(),
                                std::back_inserter(rest));
            for (const auto& comp : connected_components(induced_subgraph(g, rest))) {
              int home = node_of.at(comp.front());
              for (int v : comp)
                if (node_of.at(v) != home)
                  fails.add(item.name + ": component of g[Z_i\\Z'] split across V_t");
            }
          }
        }

        for (const auto& [u, v] : g.edges()) {
          int tu = node_of.at(u), tv = node_of.at(v);
          if (tu == tv) continue;
          if (tree.nodes[tu].parent != tv && tree.nodes[tv].parent != tu)
            fails.add(item.name + ": edge between non-adjacent support nodes");
        }
      }
    }
  }
  r.report["trees"] = trees;
  fails.finish(r);
  return r;
}

SuiteResult suite_deepface(const std::vector<CorpusItem>& items, int a, int b,
                           uint64_t seed) {
  SuiteResult r;
  Failures fails;
  int annuli = 0, deep_faces = 0;
  int max_components = 0;
  for (const auto& item : items) {
    if (item.gg.graph.num_vertices() > 60) continue;
    Embedding e = corpus_embedding(item);
    Layering l = compute_layering(e);
    for (int p = 1; p <= 2; ++p) {
      ResiduePlan plan = choose_residues(l.bad_layers, e.num_marked_faces(), p);
      LayerSets sets = build_layer_sets(l, plan);
      for (int i = 1; i <= p; ++i) {
        const auto& zi = sets.z[i - 1];
        int q = plan.good_residues[i - 1];
        int m_prime = static_cast<int>(floordiv(l.m - q, plan.p_prime)) + 2;
        for (int j = 1; j <= m_prime; ++j) {
          Annulus ann = annulus_for_level(l, plan, i, j);
          if (ann.vertices.empty()) continue;
          for (int zsize : {0, 1, 2}) {
            Rng rng(seed + 31 * annuli + zsize);
            auto zp = rng.sample(zi, std::min<size_t>(zsize, zi.size()));
            FaceClassification fc = classify_faces(e, l, ann, zi, zp);
            ++annuli;
            for (const auto& face : fc.faces) {
              if (!face.deep) {
                if (!face.kappa.empty())
                  fails.add(item.name + ": shallow face with non-empty kappa");
                continue;
              }
              ++deep_faces;
              int comps = static_cast<int>(face.components.size());
              max_components = std::max(max_components, comps);
              if (comps > a * static_cast<int>(zp.size()) + b)
                fails.add(item.name + ": deep face meets " + std::to_string(comps) +
                          " components with |Z'|=" + std::to_string(zp.size()));
              for (int v : face.kappa)
                if (!std::binary_search(face.boundary.begin(), face.boundary.end(), v))
                  fails.add(item.name + ": kappa vertex off the face boundary");
              if (face.w_kappa != static_cast<int>(face.kappa.size()))
                fails.add(item.name + ": w_kappa mismatch");
            }
          }
        }
      }
    }
  }
  r.report["annuli"] = annuli;
  r.report["deep_faces"] = deep_faces;
  r.report["max_components_per_deep_face"] = max_components;
  r.report["cap"] = {{"a", a}, {"b", b}};
  fails.finish(r);
  return r;
}

SuiteResult suite_weighted_diameter(const std::vector<CorpusItem>& items, int max_n_exact,
                                    double slope_cap, uint64_t seed) {
  SuiteResult r;
  Failures fails;
  int zero_checks = 0;
  std::vector<std::pair<double, double>> points;  // (p' + |Z'| + 1, diameter)
  double max_ratio = 0.0;

  for (const auto& item : items) {
    const int n = item.gg.graph.num_vertices();
    if (n > 60) continue;
    Embedding e = corpus_embedding(item);
    Layering l = compute_layering(e);

    if (n <= max_n_exact) {
      // zero-weight diameter of the whole graph == plain BFS diameter
      Annulus whole;
      whole.level_j = 1;
      whole.i_minus = 1;
      whole.i_plus = l.m;
      whole.vertices = e.graph().vertices();
      whole.top_layer = l.layer(l.m);
      FaceClassification fc = classify_faces(e, l, whole, {}, {});
      for (const auto& face : fc.faces)
        if (face.w_kappa != 0) fails.add(item.name + ": expected all-zero weights");
      long long wd = weighted_diameter(e, fc);
      int oracle = vfi_bfs_diameter(e);
      ++zero_checks;
      if (wd != oracle)
        fails.add(item.name + ": zero-weight diameter " + std::to_string(wd) +
                  " != BFS diameter " + std::to_string(oracle));
    }

    for (int p = 1; p <= 2; ++p) {
      ResiduePlan plan = choose_residues(l.bad_layers, e.num_marked_faces(), p);
      LayerSets sets = build_layer_sets(l, plan);
      for (int i = 1; i <= p; ++i) {
        const auto& zi = sets.z[i - 1];
        int q = plan.good_residues[i - 1];
        int m_prime = static_cast<int>(floordiv(l.m - q, plan.p_prime)) + 2;
        for (int j = 1; j <= m_prime; ++j) {
          Annulus ann = annulus_for_level(l, plan, i, j);
          if (ann.vertices.empty()) continue;
          Rng rng(seed + 17 * j + i);
          auto zp = rng.sample(zi, std::min<size_t>(2, zi.size()));
          FaceClassification fc = classify_faces(e, l, ann, zi, zp);
          long long d = weighted_diameter(e, fc);
          double x = plan.p_prime + static_cast<double>(zp.size()) + 1;
          points.emplace_back(x, static_cast<double>(d));
          max_ratio = std::max(max_ratio, d / x);
        }
      }
    }
  }

  double slope = 0.0;
  if (points.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = points.size() * sxx - sx * sx;
    if (std::abs(denom) > 1e-12) slope = (points.size() * sxy - sx * sy) / denom;
  }
  if (slope > slope_cap) fails.add("diameter regression slope exceeds cap");

  r.report["zero_weight_checks"] = zero_checks;
  r.report["annuli_measured"] = static_cast<int>(points.size());
  r.report["regression_slope"] = slope;
  r.report["slope_cap"] = slope_cap;
  r.report["max_diameter_ratio"] = max_ratio;
  fails.finish(r);
  return r;
}

SuiteResult suite_width_scaling(const WidthScalingConfig& cfg) {
  SuiteResult r;
  Failures fails;
  double max_ratio = 0.0;
  int samples = 0, validated = 0;

  std::vector<std::pair<std::string, GeneratedGraph>> graphs;
  for (int s : cfg.grid_sizes)
    graphs.emplace_back("grid-" + std::to_string(s), gen_grid(s, s));
  for (int s : cfg.chorded_grid_sizes)
    graphs.emplace_back("chords-" + std::to_string(s),
                        gen_grid_with_chords(s, s, s * s / 8, cfg.seed * 53 + s));
  for (int n : cfg.random_sizes)
    graphs.emplace_back("rand-" + std::to_string(n),
                        gen_random_planar(n, 2 * n, cfg.seed * 97 + n));

  for (auto& [name, gg] : graphs) {
    Embedding e = Embedding::from_rotation(gg.graph, gg.rotation);
    for (int p : cfg.p_values) {
      PlanarDecomposition dec = build_layer_sets_multi({e}, p);
      std::vector<int> is{1, p};
      is.erase(std::unique(is.begin(), is.end()), is.end());
      for (int i : is) {
        const auto& zi = dec.sets.z[i - 1];
        for (int zsize : cfg.zprime_sizes) {
          Rng rng(cfg.seed ^ (uint64_t(p) << 24) ^ (uint64_t(i) << 16) ^ zsize);
          auto zp = rng.sample(zi, std::min<size_t>(zsize, zi.size()));
          QuotientGraph q = contract_decomposition(gg.graph, dec.sets, {i, zp});
          TreeDecomposition td = heuristic_decompose(q.graph);
          ++samples;
          double budget = p + static_cast<double>(zp.size()) + 1;
          double ratio = td.width() / budget;
          max_ratio = std::max(max_ratio, ratio);
          if (td.width() > cfg.cap * budget)
            fails.add(name + ": width " + std::to_string(td.width()) + " exceeds " +
                      std::to_string(cfg.cap) + "*(p+|Z'|+1) at p=" + std::to_string(p));
          if (q.graph.num_vertices() <= 400) {
            ++validated;
            if (!validate(td, q.graph))
              fails.add(name + ": invalid quotient decomposition");
          }
        }
      }
    }
  }
  r.report["samples"] = samples;
  r.report["validated"] = validated;
  r.report["max_width_ratio"] = max_ratio;
  r.report["cap"] = cfg.cap;
  fails.finish(r);
  return r;
}

SuiteResult suite_oracle_equivalence(int count, uint64_t seed, int threads) {
  SuiteResult r;
  Failures fails;
  auto cases = solver_corpus(count, seed);
  int yes = 0, no = 0;
  for (const auto& c : cases) {
    Embedding e = Embedding::from_rotation(c.gg.graph, c.gg.rotation);
    for (Problem problem : {Problem::OCT, Problem::EB}) {
      Instance inst = make_instance(c.gg.graph, problem, c.k);
      BakerOptions opts;
      opts.threads = threads;
      auto fast = baker_solve(inst, {e}, opts);
      auto slow = brute_force(inst);
      if (fast.has_value() != slow.has_value()) {
        fails.add(c.name + ": feasibility mismatch");
        continue;
      }
      if (fast) {
        ++yes;
        if (fast->size() != slow->size())
          fails.add(c.name + ": size mismatch " + std::to_string(fast->size()) + " vs " +
                    std::to_string(slow->size()));
        if (!solution_valid(inst, *fast)) fails.add(c.name + ": invalid solution");
      } else {
        ++no;
      }
    }
  }
  r.report["instances"] = static_cast<int>(cases.size()) * 2;
  r.report["feasible"] = yes;
  r.report["infeasible"] = no;
  fails.finish(r);
  return r;
}

SuiteResult suite_decomposition_validity(const std::vector<CorpusItem>& items,
                                         bool inject_invalid_fixture) {
  SuiteResult r;
  Failures fails;
  int decomposed = 0, apexed = 0;
  for (const auto& item : items) {
    const Graph& g = item.gg.graph;
    TreeDecomposition td = heuristic_decompose(g);
    ++decomposed;
    std::vector<std::string> v;
    if (!validate(td, g, &v))
      fails.add(item.name + ": heuristic decomposition invalid: " + v.front());
    NiceTreeDecomposition ntd = to_nice(td);
    if (ntd.width() != td.width()) fails.add(item.name + ": to_nice changed the width");
    if (!validate_nice_form(ntd, g, &v))
      fails.add(item.name + ": nice form invalid: " + v.front());

    if (decomposed % 7 == 0 && g.num_vertices() > 0) {
      // apex adjacent to everything, added to all bags
      int apex = g.vertices().back() + 1;
      std::vector<int> verts = g.vertices();
      verts.push_back(apex);
      std::vector<Edge> edges = g.edges();
      for (int u : g.vertices()) edges.push_back(make_edge(apex, u));
      Graph aug = Graph::from_edges(verts, edges, {apex});
      TreeDecomposition td2 = add_apices(td, {apex});
      ++apexed;
      if (!validate(td2, aug)) fails.add(item.name + ": apex-augmented decomposition invalid");
      if (td2.width() != td.width() + 1) fails.add(item.name + ": apex width growth wrong");
    }
  }
  if (inject_invalid_fixture) {
    // A bag deliberately missing one edge's endpoints: the validator must
    // report it, which makes this suite (and the run) fail.
    Graph g = gen_cycle(4).graph;
    TreeDecomposition bad;
    bad.nodes.push_back({{0, 1, 2}, -1, {}});
    std::vector<std::string> v;
    if (validate(bad, g, &v)) {
      fails.add("injected fixture: validator missed the corruption");
    } else {
      for (const auto& msg : v) fails.add("injected fixture: " + msg);
    }
  }
  r.report["decomposed"] = decomposed;
  r.report["apex_checked"] = apexed;
  fails.finish(r);
  return r;
}

SuiteResult suite_determinism(int count, uint64_t seed) {
  SuiteResult r;
  Failures fails;
  auto cases = solver_corpus(count, seed);
  int compared = 0;
  for (const auto& c : cases) {
    Embedding e = Embedding::from_rotation(c.gg.graph, c.gg.rotation);
    for (Problem problem : {Problem::OCT, Problem::EB}) {
      Instance inst = make_instance(c.gg.graph, problem, c.k);
      BakerStats s1, s8, s8b;
      BakerOptions o1, o8;
      o1.threads = 1;
      o8.threads = 8;
      auto r1 = baker_solve(inst, {e}, o1, &s1);
      auto r8 = baker_solve(inst, {e}, o8, &s8);
      auto r8b = baker_solve(inst, {e}, o8, &s8b);
      ++compared;
      auto same = [](const std::optional<Solution>& a, const std::optional<Solution>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->vertices == b->vertices && a->edges == b->edges;
      };
      if (!same(r1, r8) || !same(r8, r8b)) fails.add(c.name + ": solutions differ");
      std::string j1 = solve_json(inst, r1, s1, false).dump();
      std::string j8 = solve_json(inst, r8, s8, false).dump();
      std::string j8b = solve_json(inst, r8b, s8b, false).dump();
      if (j1 != j8 || j8 != j8b) fails.add(c.name + ": reports differ");
    }
  }
  r.report["instances"] = compared;
  fails.finish(r);
  return r;
}

VerifyResult run_verify(const VerifyConfig& cfg) {
  VerifyResult out;
  out.report["suites"] = Json::array();
  if (cfg.empty_corpus) {
    out.report["pass"] = true;
    return out;
  }
  auto items = small_corpus();
  auto push = [&](const std::string& name, SuiteResult s) {
    Json j;
    j["name"] = name;
    j["pass"] = s.pass;
    j["details"] = std::move(s.report);
    out.report["suites"].push_back(std::move(j));
    out.pass = out.pass && s.pass;
  };
  push("layering", suite_layering(cfg.layering_count, cfg.layering_max_n, cfg.seed));
  push("sameface", suite_sameface(items));
  push("support_tree", suite_support_tree(items, cfg.seed));
  push("deepface", suite_deepface(items, cfg.deepface_a, cfg.deepface_b, cfg.seed));
  push("weighted_diameter", suite_weighted_diameter(items, 20, cfg.diam_slope_cap, cfg.seed));
  {
    WidthScalingConfig wcfg;
    wcfg.grid_sizes = {8, 10, 12};
    wcfg.random_sizes = {120, 240};
    wcfg.cap = cfg.width_cap;
    wcfg.seed = cfg.seed;
    push("width_scaling", suite_width_scaling(wcfg));
  }
  push("oracle_equivalence", suite_oracle_equivalence(cfg.solver_count, cfg.seed, cfg.threads));
  push("decomposition_validity",
       suite_decomposition_validity(items, cfg.inject_invalid_fixture));
  push("determinism", suite_determinism(cfg.determinism_count, cfg.seed));
  out.report["pass"] = out.pass;
  return out;
}

}  // namespace baker
