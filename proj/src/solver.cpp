#include "baker/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <memory>
#include <thread>
#include <tuple>

namespace baker {

namespace {

constexpr int kInf = INT_MAX / 2;

std::vector<int> merge_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> merge_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> diff_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Fixed-size combinations of a sorted pool in lexicographic order. The
/// visitor returns false to stop early; the function reports whether the
/// enumeration ran to completion.
bool for_each_combination(const std::vector<int>& pool, int t,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  if (t == 0) return fn({});
  if (t > static_cast<int>(pool.size())) return true;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::vector<int> subset(t);
  while (true) {
    for (int i = 0; i < t; ++i) subset[i] = pool[idx[i]];
    if (!fn(subset)) return false;
    int i = t - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - t + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

long long binom_capped(long long n, long long r, long long cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (long long i = 1; i <= r; ++i) {
    if (acc > cap / n) return cap;
    acc = acc * (n - r + i) / i;
    if (acc >= cap) return cap;
  }
  return acc;
}

}  // namespace

void set_trivial_candidate(Instance& inst) {
  if (inst.problem == Problem::OCT)
    inst.cand_vertices = inst.g.vertices();
  else
    inst.cand_edges = inst.g.edges();
}

Instance make_instance(Graph g, Problem problem, int k) {
  if (k < 0) throw InputError("budget k must be non-negative");
  Instance inst;
  inst.g = std::move(g);
  inst.problem = problem;
  inst.k = k;
  set_trivial_candidate(inst);
  return inst;
}

bool solution_valid(const Instance& inst, const Solution& s) {
  if (s.size() > inst.k) return false;
  if (inst.problem == Problem::OCT) {
    if (!s.edges.empty()) return false;
    for (int v : s.vertices)
      if (!std::binary_search(inst.cand_vertices.begin(), inst.cand_vertices.end(), v))
        return false;
    auto keep = diff_sorted(inst.g.vertices(), s.vertices);
    return bipartition(induced_subgraph(inst.g, keep)).ok();
  }
  if (!s.vertices.empty()) return false;
  for (const auto& e : s.edges)
    if (!std::binary_search(inst.cand_edges.begin(), inst.cand_edges.end(), e)) return false;
  std::vector<Edge> kept;
  for (const auto& e : inst.g.edges())
    if (!std::binary_search(s.edges.begin(), s.edges.end(), e)) kept.push_back(e);
  Graph h = Graph::from_edges(inst.g.vertices(), kept, inst.g.apex_set());
  return bipartition(h).ok();
}

namespace {

struct Entry {
  int cost = kInf;
  std::vector<int> verts;
  std::vector<Edge> edges;
  bool feasible() const { return cost < kInf; }
};

bool better(const Entry& a, const Entry& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.verts != b.verts) return a.verts < b.verts;
  return a.edges < b.edges;
}

struct VertexInfo {
  bool component = false;
  bool can_delete = false;
  std::vector<int> pre;
  std::vector<int> color;  // canonical bipartition color per preimage vertex
  std::array<char, 2> side_ok{1, 1};
  std::array<UnaryConstraints::EbExtra, 2> extra;
};

struct QEdgeInfo {
  // buckets by parity z: the original cross edges that turn monochromatic
  // exactly when the two orientations differ by z
  std::array<int, 2> cand_count{0, 0};
  std::array<int, 2> noncand_count{0, 0};
  std::array<std::vector<Edge>, 2> cand_edges;
};

struct DpContext {
  const Instance* inst = nullptr;
  int budget = 0;
  std::unordered_map<int, VertexInfo> vinfo;
  std::map<Edge, QEdgeInfo> einfo;

  int domain(int qv) const {
    const auto& vi = vinfo.at(qv);
    if (inst->problem == Problem::OCT && vi.can_delete) return 3;
    return 2;
  }
};

std::optional<DpContext> build_context(const Instance& inst, const QuotientGraph& q,
                                       const UnaryConstraints* unary, int budget) {
  DpContext ctx;
  ctx.inst = &inst;
  ctx.budget = budget;

  Bipartition bp = bipartition(induced_subgraph(inst.g, q.contracted_set));
  if (!bp.ok()) return std::nullopt;  // contracted part must stay bipartite

  auto in_contracted = [&](int v) {
    return std::binary_search(q.contracted_set.begin(), q.contracted_set.end(), v);
  };
  auto color_of = [&](int v) { return in_contracted(v) ? bp.color(v) : 0; };

  for (const auto& [rep, pre] : q.preimage) {
    VertexInfo vi;
    vi.pre = pre;
    vi.component = in_contracted(pre.front());
    vi.can_delete =
        inst.problem == Problem::OCT && !vi.component &&
        std::binary_search(inst.cand_vertices.begin(), inst.cand_vertices.end(), rep);
    for (int u : pre) vi.color.push_back(color_of(u));
    for (int o = 0; o < 2; ++o) {
      bool ok = true;
      auto& extra = vi.extra[o];
      for (size_t idx = 0; idx < vi.pre.size(); ++idx) {
        int u = vi.pre[idx];
        int side = vi.color[idx] ^ o;
        if (unary) {
          auto mit = unary->allowed_mask.find(u);
          if (mit != unary->allowed_mask.end() && !((mit->second >> side) & 1)) ok = false;
          auto eit = unary->eb_extra.find(u);
          if (eit != unary->eb_extra.end()) {
            const auto& ee = eit->second[side];
            if (!ee.feasible) ok = false;
            extra.cost += ee.cost;
            extra.edges = merge_union(extra.edges, ee.edges);
          }
        }
      }
      vi.side_ok[o] = ok ? 1 : 0;
      extra.feasible = ok;
    }
    ctx.vinfo.emplace(rep, std::move(vi));
  }

  for (const auto& [u, w] : inst.g.edges()) {
    auto iu = q.image.find(u);
    auto iw = q.image.find(w);
    if (iu == q.image.end() || iw == q.image.end()) continue;  // handled outside the quotient
    if (iu->second == iw->second) continue;  // inside a contracted component
    int z = color_of(u) ^ color_of(w);
    auto& info = ctx.einfo[make_edge(iu->second, iw->second)];
    if (inst.problem == Problem::EB &&
        std::binary_search(inst.cand_edges.begin(), inst.cand_edges.end(), make_edge(u, w))) {
      info.cand_count[z]++;
      info.cand_edges[z].push_back(make_edge(u, w));
    } else {
      info.noncand_count[z]++;
    }
  }
  for (auto& [e, info] : ctx.einfo) {
    (void)e;
    for (auto& v : info.cand_edges) std::sort(v.begin(), v.end());
  }
  return ctx;
}

struct DpTable {
  std::vector<int> bag;
  std::vector<long long> stride;
  long long size = 1;
  std::vector<Entry> entries;
};

std::optional<Entry> run_dp(const DpContext& ctx, const QuotientGraph& q,
                            const NiceTreeDecomposition& ntd) {
  std::vector<std::string> violations;
  if (!validate_nice_form(ntd, q.graph, &violations))
    throw InputError("invalid decomposition: " + violations.front());
  const bool is_eb = ctx.inst->problem == Problem::EB;
  auto post = ntd.postorder();
  std::vector<std::unique_ptr<DpTable>> tables(ntd.nodes.size());

  auto make_table = [&](const std::vector<int>& bag) {
    auto t = std::make_unique<DpTable>();
    t->bag = bag;
    t->stride.resize(bag.size());
    for (size_t i = 0; i < bag.size(); ++i) {
      t->stride[i] = t->size;
      t->size *= ctx.domain(bag[i]);
    }
    t->entries.assign(t->size, Entry{});
    return t;
  };
  auto state_of = [&](const DpTable& t, long long idx, size_t pos) {
    return static_cast<int>((idx / t.stride[pos]) % ctx.domain(t.bag[pos]));
  };

  for (int node : post) {
    const auto& n = ntd.nodes[node];
    auto table = make_table(n.bag);
    switch (n.kind) {
      case NodeKind::Leaf:
        table->entries[0] = Entry{0, {}, {}};
        break;
      case NodeKind::Introduce: {
        auto& child = tables[n.children[0]];
        const int x = n.vertex;
        const size_t px =
            std::lower_bound(n.bag.begin(), n.bag.end(), x) - n.bag.begin();
        const long long s_lo = table->stride[px];
        const int dom_x = ctx.domain(x);
        const auto& vx = ctx.vinfo.at(x);
        // bag neighbors of x in the quotient graph
        std::vector<std::pair<size_t, const QEdgeInfo*>> nbrs;
        for (size_t j = 0; j < n.bag.size(); ++j) {
          if (j == px) continue;
          auto it = ctx.einfo.find(make_edge(x, n.bag[j]));
          if (it != ctx.einfo.end()) nbrs.emplace_back(j, &it->second);
        }
        for (long long ci = 0; ci < child->size; ++ci) {
          const Entry& ce = child->entries[ci];
          if (!ce.feasible()) continue;
          for (int sx = 0; sx < dom_x; ++sx) {
            long long ni = (ci % s_lo) + sx * s_lo + (ci / s_lo) * s_lo * dom_x;
            Entry ne = ce;
            bool ok = true;
            if (sx == 2) {
              ne.cost += 1;
              ne.verts = merge_union(ne.verts, std::vector<int>{x});
            } else {
              if (!vx.side_ok[sx]) ok = false;
              if (ok && is_eb) {
                const auto& extra = vx.extra[sx];
                ne.cost += extra.cost;
                if (!extra.edges.empty()) ne.edges = merge_union(ne.edges, extra.edges);
              }
              for (const auto& [j, info] : nbrs) {
                if (!ok) break;
                int sy = state_of(*table, ni, j);
                if (sy == 2) continue;
                int z = sx ^ sy;
                if (info->noncand_count[z] > 0) {
                  ok = false;
                  break;
                }
                if (info->cand_count[z] > 0) {
                  ne.cost += info->cand_count[z];
                  ne.edges = merge_union(ne.edges, info->cand_edges[z]);
                }
              }
            }
            if (!ok || ne.cost > ctx.budget) continue;
            table->entries[ni] = std::move(ne);
          }
        }
        tables[n.children[0]].reset();
        break;
      }
      case NodeKind::Forget: {
        auto& child = tables[n.children[0]];
        const int x = n.vertex;
        const size_t px =
            std::lower_bound(child->bag.begin(), child->bag.end(), x) - child->bag.begin();
        const long long s_lo = child->stride[px];
        const int dom_x = ctx.domain(x);
        for (long long ci = 0; ci < child->size; ++ci) {
          const Entry& ce = child->entries[ci];
          if (!ce.feasible()) continue;
          long long ni = (ci % s_lo) + (ci / (s_lo * dom_x)) * s_lo;
          if (better(ce, table->entries[ni])) table->entries[ni] = ce;
        }
        tables[n.children[0]].reset();
        break;
      }
      case NodeKind::Join: {
        auto& left = tables[n.children[0]];
        auto& right = tables[n.children[1]];
        // quotient edges inside the bag (EB double-counts them at the join)
        std::vector<std::tuple<size_t, size_t, const QEdgeInfo*>> inner;
        for (size_t a = 0; a < n.bag.size(); ++a)
          for (size_t b = a + 1; b < n.bag.size(); ++b) {
            auto it = ctx.einfo.find(make_edge(n.bag[a], n.bag[b]));
            if (it != ctx.einfo.end()) inner.emplace_back(a, b, &it->second);
          }
        for (long long s = 0; s < table->size; ++s) {
          const Entry& e1 = left->entries[s];
          const Entry& e2 = right->entries[s];
          if (!e1.feasible() || !e2.feasible()) continue;
          int base = 0;
          for (size_t j = 0; j < n.bag.size(); ++j) {
            int sj = state_of(*table, s, j);
            if (sj == 2)
              base += 1;
            else if (is_eb)
              base += ctx.vinfo.at(n.bag[j]).extra[sj].cost;
          }
          if (is_eb) {
            for (const auto& [a, b, info] : inner) {
              int sa = state_of(*table, s, a);
              int sb = state_of(*table, s, b);
              if (sa == 2 || sb == 2) continue;
              base += info->cand_count[sa ^ sb];
            }
          }
          Entry ne;
          ne.cost = e1.cost + e2.cost - base;
          if (ne.cost > ctx.budget) continue;
          ne.verts = merge_union(e1.verts, e2.verts);
          ne.edges = merge_union(e1.edges, e2.edges);
          table->entries[s] = std::move(ne);
        }
        tables[n.children[0]].reset();
        tables[n.children[1]].reset();
        break;
      }
    }
    tables[node] = std::move(table);
  }
  Entry root = tables[ntd.root]->entries[0];
  if (!root.feasible()) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Solution> dp_solve_contracted(const Instance& inst, const QuotientGraph& q,
                                            const NiceTreeDecomposition& ntd,
                                            const UnaryConstraints* unary, int budget) {
  if (budget < 0) budget = inst.k;
  auto ctx = build_context(inst, q, unary, budget);
  if (!ctx) return std::nullopt;
  auto entry = run_dp(*ctx, q, ntd);
  if (!entry) return std::nullopt;
  Solution s;
  s.vertices = std::move(entry->verts);
  s.edges = std::move(entry->edges);
  return s;
}

std::optional<Solution> dp_solve(const Instance& inst, const NiceTreeDecomposition& ntd) {
  QuotientGraph qid;
  qid.graph = inst.g;
  for (int v : inst.g.vertices()) {
    qid.preimage[v] = {v};
    qid.image[v] = v;
  }
  return dp_solve_contracted(inst, qid, ntd);
}

long long BakerPlan::pair_count() const {
  const long long limit = LLONG_MAX / 2;
  long long total = 0;
  for (const auto& zc : zcand) {
    for (int s = 0; s <= std::min<int>(cap, static_cast<int>(zc.size())); ++s) {
      total += binom_capped(static_cast<long long>(zc.size()), s, limit);
      if (total >= limit) return limit;
    }
  }
  return total;
}

void BakerPlan::for_each_pair(
    const std::function<void(int, const std::vector<int>&)>& f) const {
  for (int i = 1; i <= p; ++i) {
    const auto& zc = zcand[i - 1];
    for (int s = 0; s <= std::min<int>(cap, static_cast<int>(zc.size())); ++s)
      for_each_combination(zc, s, [&](const std::vector<int>& zp) {
        f(i, zp);
        return true;
      });
  }
}

BakerPlan make_baker_plan(const Instance& inst, const LayerSets& sets, int p) {
  BakerPlan plan;
  plan.p = p;
  if (inst.problem == Problem::OCT) {
    plan.cap = inst.k / p;
    for (const auto& zi : sets.z) {
      std::vector<int> zc;
      std::set_intersection(zi.begin(), zi.end(), inst.cand_vertices.begin(),
                            inst.cand_vertices.end(), std::back_inserter(zc));
      plan.zcand.push_back(std::move(zc));
    }
  } else {
    plan.cap = 2 * inst.k / p;
    std::vector<int> cand_prime;  // endpoints of candidate edges
    for (const auto& [u, v] : inst.cand_edges) {
      cand_prime.push_back(u);
      cand_prime.push_back(v);
    }
    std::sort(cand_prime.begin(), cand_prime.end());
    cand_prime.erase(std::unique(cand_prime.begin(), cand_prime.end()), cand_prime.end());
    for (const auto& zi : sets.z) {
      std::vector<int> zc;
      std::set_intersection(zi.begin(), zi.end(), cand_prime.begin(), cand_prime.end(),
                            std::back_inserter(zc));
      plan.zcand.push_back(std::move(zc));
    }
  }
  return plan;
}

namespace {

struct ApexCombo {
  bool feasible = true;
  int base_cost = 0;
  std::vector<int> del_verts;
  std::vector<Edge> base_edges;
  UnaryConstraints unary;
};

std::vector<ApexCombo> enumerate_apex_combos(const Instance& inst) {
  const auto& apices = inst.g.apex_set();
  std::vector<int> dom;
  for (int a : apices) {
    bool deletable =
        inst.problem == Problem::OCT &&
        std::binary_search(inst.cand_vertices.begin(), inst.cand_vertices.end(), a);
    dom.push_back(deletable ? 3 : 2);
  }
  long long total = 1;
  for (int d : dom) total *= d;
  std::vector<ApexCombo> combos;
  for (long long idx = 0; idx < total; ++idx) {
    ApexCombo c;
    std::vector<int> state(apices.size());
    long long rest = idx;
    for (size_t i = 0; i < apices.size(); ++i) {
      state[i] = static_cast<int>(rest % dom[i]);
      rest /= dom[i];
    }
    for (size_t i = 0; i < apices.size(); ++i) {
      if (state[i] != 2) continue;
      c.base_cost += 1;
      c.del_verts.push_back(apices[i]);
    }
    if (c.base_cost > inst.k) continue;
    // apex-apex edges
    for (size_t i = 0; i < apices.size() && c.feasible; ++i)
      for (size_t j = i + 1; j < apices.size() && c.feasible; ++j) {
        if (!inst.g.has_edge(apices[i], apices[j])) continue;
        if (state[i] == 2 || state[j] == 2) continue;
        if (state[i] != state[j]) continue;
        if (inst.problem == Problem::OCT) {
          c.feasible = false;
        } else {
          Edge e = make_edge(apices[i], apices[j]);
          if (std::binary_search(inst.cand_edges.begin(), inst.cand_edges.end(), e)) {
            c.base_cost += 1;
            c.base_edges.push_back(e);
          } else {
            c.feasible = false;
          }
        }
      }
    if (c.base_cost > inst.k) c.feasible = false;
    // constraints on the planar neighbors of kept apices
    if (c.feasible) {
      for (size_t i = 0; i < apices.size(); ++i) {
        if (state[i] == 2) continue;
        int side = state[i];
        for (int w : inst.g.neighbors(apices[i])) {
          if (inst.g.is_apex(w)) continue;
          if (inst.problem == Problem::OCT) {
            auto [it, inserted] = c.unary.allowed_mask.emplace(w, 3);
            (void)inserted;
            it->second &= ~(1 << side);
          } else {
            auto [it, inserted] = c.unary.eb_extra.emplace(
                w, std::array<UnaryConstraints::EbExtra, 2>{});
            (void)inserted;
            auto& ee = it->second[side];
            Edge e = make_edge(apices[i], w);
            if (std::binary_search(inst.cand_edges.begin(), inst.cand_edges.end(), e)) {
              ee.cost += 1;
              ee.edges = merge_union(ee.edges, std::vector<Edge>{e});
            } else {
              ee.feasible = false;
            }
          }
        }
      }
    }
    std::sort(c.del_verts.begin(), c.del_verts.end());
    std::sort(c.base_edges.begin(), c.base_edges.end());
    combos.push_back(std::move(c));
  }
  return combos;
}

bool solution_better(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.edges < b.edges;
}

}  // namespace

std::optional<Solution> baker_solve(const Instance& inst,
                                    const std::vector<Embedding>& embeddings,
                                    const BakerOptions& opts, BakerStats* stats) {
  auto t0 = std::chrono::steady_clock::now();
  BakerStats local;
  Graph planar = inst.g.without_apices();
  {
    std::vector<int> covered;
    for (const auto& e : embeddings)
      covered.insert(covered.end(), e.graph().vertices().begin(),
                     e.graph().vertices().end());
    std::sort(covered.begin(), covered.end());
    if (covered != planar.vertices())
      throw InputError("embeddings must cover the apex-free part of the graph");
  }

  const int p =
      opts.p_override > 0
          ? opts.p_override
          : std::max(1, static_cast<int>(std::floor(std::sqrt(double(inst.k)))));
  PlanarDecomposition dec = build_layer_sets_multi(embeddings, p);
  BakerPlan plan = make_baker_plan(inst, dec.sets, p);
  local.pairs_total = plan.pair_count();

  auto combos = enumerate_apex_combos(inst);
  local.apex_combos = static_cast<long long>(combos.size());

  // Only maximal-size Z' are solved: shrinking Z' only shrinks the solution
  // space of the pair, so the minimum over maximal pairs equals the minimum
  // over the whole plan.
  struct Task {
    int i;
    std::vector<int> zp;
  };
  std::vector<Task> tasks;
  constexpr long long kTaskLimit = 4'000'000;
  for (int i = 1; i <= plan.p; ++i) {
    const auto& zc = plan.zcand[i - 1];
    int t = std::min<int>(plan.cap, static_cast<int>(zc.size()));
    if (binom_capped(static_cast<long long>(zc.size()), t, kTaskLimit) +
            static_cast<long long>(tasks.size()) >=
        kTaskLimit)
      throw InputError("Baker enumeration is too large for this instance");
    for_each_combination(zc, t, [&](const std::vector<int>& zp) {
      tasks.push_back({i, zp});
      return true;
    });
  }

  const int nthreads = std::max(1, opts.threads);
  std::atomic<size_t> cursor{0};
  std::vector<std::optional<Solution>> best(nthreads);
  std::vector<long long> solved(nthreads, 0);
  std::vector<int> widths(nthreads, -1);
  std::vector<std::exception_ptr> errors(nthreads);

  auto worker = [&](int tid) {
    while (true) {
      size_t at = cursor.fetch_add(1);
      if (at >= tasks.size()) break;
      const Task& task = tasks[at];
      std::vector<int> x = diff_sorted(dec.sets.z[task.i - 1], task.zp);
      if (!bipartition(induced_subgraph(inst.g, x)).ok()) continue;
      solved[tid]++;
      QuotientGraph q = contract(planar, x);
      TreeDecomposition td = heuristic_decompose(q.graph);
      widths[tid] = std::max(widths[tid], td.width());
      NiceTreeDecomposition ntd = to_nice(td);
      for (const auto& combo : combos) {
        if (!combo.feasible) continue;
        int budget = inst.k - combo.base_cost;
        if (budget < 0) continue;
        auto res = dp_solve_contracted(inst, q, ntd, &combo.unary, budget);
        if (!res) continue;
        Solution full;
        full.vertices = merge_union(res->vertices, combo.del_verts);
        full.edges = merge_union(res->edges, combo.base_edges);
        if (!best[tid] || solution_better(full, *best[tid])) best[tid] = std::move(full);
      }
    }
  };

  auto guarded = [&](int tid) {
    try {
      worker(tid);
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (nthreads == 1) {
    guarded(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(guarded, t);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::optional<Solution> answer;
  for (int t = 0; t < nthreads; ++t) {
    local.pairs_solved += solved[t];
    local.max_width = std::max(local.max_width, widths[t]);
    if (best[t] && (!answer || solution_better(*best[t], *answer)))
      answer = std::move(best[t]);
  }
  local.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (stats) *stats = local;
  return answer;
}

std::optional<Solution> baker_solve(const Instance& inst, const BakerOptions& opts,
                                    BakerStats* stats) {
  Graph planar = inst.g.without_apices();
  std::vector<Embedding> embeddings;
  for (const auto& comp : connected_components(planar))
    embeddings.push_back(embed_planar(induced_subgraph(planar, comp)));
  return baker_solve(inst, embeddings, opts, stats);
}

std::optional<Solution> brute_force(const Instance& inst) {
  std::optional<Solution> found;
  if (inst.problem == Problem::OCT) {
    for (int s = 0; s <= std::min<int>(inst.k, static_cast<int>(inst.cand_vertices.size()));
         ++s) {
      for_each_combination(inst.cand_vertices, s, [&](const std::vector<int>& del) {
        auto keep = diff_sorted(inst.g.vertices(), del);
        if (bipartition(induced_subgraph(inst.g, keep)).ok()) {
          found = Solution{del, {}};
          return false;
        }
        return true;
      });
      if (found) break;
    }
    return found;
  }
  auto all_edges = inst.g.edges();
  std::vector<int> idxs(inst.cand_edges.size());
  for (size_t i = 0; i < idxs.size(); ++i) idxs[i] = static_cast<int>(i);
  for (int s = 0; s <= std::min<int>(inst.k, static_cast<int>(idxs.size())); ++s) {
    for_each_combination(idxs, s, [&](const std::vector<int>& pick) {
      std::vector<Edge> del;
      for (int i : pick) del.push_back(inst.cand_edges[i]);
      std::vector<Edge> kept;
      for (const auto& e : all_edges)
        if (!std::binary_search(del.begin(), del.end(), e)) kept.push_back(e);
      Graph h = Graph::from_edges(inst.g.vertices(), kept, inst.g.apex_set());
      if (bipartition(h).ok()) {
        found = Solution{{}, del};
        return false;
      }
      return true;
    });
    if (found) break;
  }
  return found;
}

}  // namespace baker
