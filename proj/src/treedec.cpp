#include "baker/treedec.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>

namespace baker {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
    } else {
      stack.emplace_back(t, true);
      for (int c : nodes[t].children) stack.emplace_back(c, false);
    }
  }
  return order;
}

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// A set of nodes in a rooted tree is connected iff exactly one of them has a
// parent outside the set.
bool occurrences_connected(const TreeDecomposition& td, int v) {
  int tops = 0, count = 0;
  for (int t = 0; t < static_cast<int>(td.nodes.size()); ++t) {
    if (!contains(td.nodes[t].bag, v)) continue;
    ++count;
    int p = td.nodes[t].parent;
    if (p < 0 || !contains(td.nodes[p].bag, v)) ++tops;
  }
  return count == 0 || tops == 1;
}

}  // namespace

bool validate(const TreeDecomposition& td, const Graph& g,
              std::vector<std::string>* violations) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (violations) violations->push_back(msg);
  };

  if (td.nodes.empty()) {
    if (g.num_vertices() > 0) fail("empty decomposition for a non-empty graph");
    return ok;
  }

  // Tree shape: parent/children agree, every node reachable from the root.
  std::vector<char> seen(td.nodes.size(), 0);
  std::deque<int> queue{td.root};
  seen[td.root] = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int c : td.nodes[t].children) {
      if (td.nodes[c].parent != t) fail("child/parent mismatch at node " + std::to_string(c));
      if (seen[c]) {
        fail("node visited twice; not a tree");
        continue;
      }
      seen[c] = 1;
      queue.push_back(c);
    }
  }
  for (size_t t = 0; t < td.nodes.size(); ++t)
    if (!seen[t]) fail("node " + std::to_string(t) + " unreachable from root");

  for (const auto& n : td.nodes)
    for (int v : n.bag)
      if (!g.has_vertex(v)) fail("bag contains unknown vertex " + std::to_string(v));

  for (int v : g.vertices()) {
    bool found = false;
    for (const auto& n : td.nodes)
      if (contains(n.bag, v)) {
        found = true;
        break;
      }
    if (!found) fail("vertex " + std::to_string(v) + " appears in no bag");
    if (!occurrences_connected(td, v))
      fail("occurrences of vertex " + std::to_string(v) + " are not connected");
  }

  for (const auto& [u, v] : g.edges()) {
    bool found = false;
    for (const auto& n : td.nodes)
      if (contains(n.bag, u) && contains(n.bag, v)) {
        found = true;
        break;
      }
    if (!found)
      fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") covered by no bag");
  }
  return ok;
}

namespace {

// Fixed-width bitset over compact vertex indices.
struct Bits {
  std::vector<uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }
  template <typename F>
  void for_each(F f) const {
    for (size_t b = 0; b < w.size(); ++b) {
      uint64_t x = w[b];
      while (x) {
        int i = std::countr_zero(x);
        f(static_cast<int>(b * 64 + i));
        x &= x - 1;
      }
    }
  }
};

int and_not_count(const Bits& a, const Bits& b) {
  int c = 0;
  for (size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & ~b.w[i]);
  return c;
}

}  // namespace

TreeDecomposition heuristic_decompose(const Graph& g) {
  TreeDecomposition td;
  const int n = g.num_vertices();
  if (n == 0) {
    td.nodes.push_back({});
    td.root = 0;
    return td;
  }
  const auto& ids = g.vertices();

  std::vector<Bits> adj(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int w : g.neighbors(ids[i])) adj[i].set(g.index_of(w));

  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = adj[i].count();

  Bits alive(n);
  for (int i = 0; i < n; ++i) alive.set(i);

  auto fill_of = [&](int v) {
    // Number of non-adjacent pairs among the live neighbors of v.
    long long f = 0;
    adj[v].for_each([&](int a) { f += and_not_count(adj[v], adj[a]) - 1; });
    return f / 2;
  };

  std::vector<long long> fill(n);
  std::vector<char> dirty(n, 1);
  std::vector<int> elim_pos(n, -1);
  std::vector<std::vector<int>> bags(n);

  for (int step = 0; step < n; ++step) {
    int best = -1;
    alive.for_each([&](int v) {
      if (dirty[v]) {
        fill[v] = fill_of(v);
        dirty[v] = 0;
      }
      if (best < 0 || fill[v] < fill[best] ||
          (fill[v] == fill[best] && (deg[v] < deg[best] || (deg[v] == deg[best] && v < best))))
        best = v;
    });

    int v = best;
    std::vector<int> nbrs;
    adj[v].for_each([&](int a) { nbrs.push_back(a); });

    bags[step].push_back(ids[v]);
    for (int a : nbrs) bags[step].push_back(ids[a]);
    std::sort(bags[step].begin(), bags[step].end());
    elim_pos[v] = step;

    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int a = nbrs[i], b = nbrs[j];
        if (adj[a].test(b)) continue;
        adj[a].set(b);
        adj[b].set(a);
        ++deg[a];
        ++deg[b];
        dirty[a] = dirty[b] = 1;
        for (size_t k = 0; k < adj[a].w.size(); ++k) {
          uint64_t common = adj[a].w[k] & adj[b].w[k] & alive.w[k];
          while (common) {
            dirty[k * 64 + std::countr_zero(common)] = 1;
            common &= common - 1;
          }
        }
      }
    for (int a : nbrs) {
      adj[a].reset(v);
      --deg[a];
      dirty[a] = 1;
    }
    alive.reset(v);
  }

  // Assemble the clique tree from the elimination order: the parent of each
  // bag is the bag of its earliest-eliminated neighbor.
  td.nodes.resize(n);
  for (int step = 0; step < n; ++step) td.nodes[step].bag = bags[step];
  std::vector<int> order_vertex(n);  // step -> compact vertex
  for (int v = 0; v < n; ++v)
    if (elim_pos[v] >= 0) order_vertex[elim_pos[v]] = v;

  for (int step = 0; step < n; ++step) {
    int v = order_vertex[step];
    int parent_step = -1;
    for (int u : bags[step]) {
      int cu = g.index_of(u);
      if (cu == v) continue;
      if (parent_step < 0 || elim_pos[cu] < parent_step) parent_step = elim_pos[cu];
    }
    if (parent_step < 0 && step != n - 1) parent_step = n - 1;  // disconnected pieces
    if (parent_step >= 0) {
      td.nodes[step].parent = parent_step;
      td.nodes[parent_step].children.push_back(step);
    }
  }
  td.root = n - 1;
  return td;
}

std::optional<int> exact_treewidth_small(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n > 24) throw InputError("exact_treewidth_small: too many vertices");
  if (n == 0) return -1 <= limit ? std::optional<int>(-1) : std::nullopt;

  std::vector<uint32_t> adj(n, 0);
  const auto& ids = g.vertices();
  for (int i = 0; i < n; ++i)
    for (int w : g.neighbors(ids[i])) adj[i] |= uint32_t(1) << g.index_of(w);

  // Degree of v when eliminated after the set s: neighbors of the component
  // of s+v containing v, outside s+v.
  auto elim_degree = [&](uint32_t s, int v) {
    uint32_t out = adj[v];
    uint32_t frontier = adj[v] & s;
    uint32_t seen = frontier;
    while (frontier) {
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f) {
        int x = std::countr_zero(f);
        f &= f - 1;
        next |= adj[x];
      }
      out |= next;
      frontier = next & s & ~seen;
      seen |= frontier;
    }
    return std::popcount(out & ~s & ~(uint32_t(1) << v));
  };

  const uint32_t full = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
  std::vector<int8_t> f(size_t(full) + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    int best = n;  // upper bound: eliminating into everything
    uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t prev = s & ~(uint32_t(1) << v);
      int val = std::max<int>(f[prev], elim_degree(prev, v));
      best = std::min(best, val);
    }
    f[s] = static_cast<int8_t>(best);
  }
  int tw = f[full];
  if (tw > limit) return std::nullopt;
  return tw;
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition out;

  int add(NodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
    int idx = static_cast<int>(out.nodes.size());
    out.nodes.push_back({kind, vertex, std::move(bag), -1, children});
    for (int c : children) out.nodes[c].parent = idx;
    return idx;
  }

  // Chain of forget/introduce nodes transforming `from` (top of subtree
  // `below`) into `to`.
  int adapt(int below, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> bag = from;
    int top = below;
    for (int v : from) {
      if (contains(to, v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      top = add(NodeKind::Forget, v, bag, {top});
    }
    for (int v : to) {
      if (contains(from, v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      top = add(NodeKind::Introduce, v, bag, {top});
    }
    return top;
  }

  int leaf_chain(const std::vector<int>& target) {
    int top = add(NodeKind::Leaf, -1, {}, {});
    return adapt(top, {}, target);
  }
};

}  // namespace

NiceTreeDecomposition to_nice(const TreeDecomposition& td) {
  NiceBuilder b;
  if (td.nodes.empty()) {
    b.out.root = b.add(NodeKind::Leaf, -1, {}, {});
    return b.out;
  }
  for (int t = 0; t < static_cast<int>(td.nodes.size()); ++t)
    for (int v : td.nodes[t].bag)
      if (!occurrences_connected(td, v))
        throw StructureError("to_nice: occurrences of vertex " + std::to_string(v) +
                             " are not connected");

  // Post-order over the input tree; tops[t] = nice node with bag(t) on top.
  std::vector<int> tops(td.nodes.size(), -1);
  std::vector<std::pair<int, bool>> stack{{td.root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.emplace_back(t, true);
      for (int c : td.nodes[t].children) stack.emplace_back(c, false);
      continue;
    }
    const auto& bag = td.nodes[t].bag;
    const auto& kids = td.nodes[t].children;
    if (kids.empty()) {
      tops[t] = b.leaf_chain(bag);
    } else {
      int acc = b.adapt(tops[kids[0]], td.nodes[kids[0]].bag, bag);
      for (size_t i = 1; i < kids.size(); ++i) {
        int rhs = b.adapt(tops[kids[i]], td.nodes[kids[i]].bag, bag);
        acc = b.add(NodeKind::Join, -1, bag, {acc, rhs});
      }
      tops[t] = acc;
    }
  }
  b.out.root = b.adapt(tops[td.root], td.nodes[td.root].bag, {});
  return b.out;
}

bool validate_nice_form(const NiceTreeDecomposition& ntd, const Graph& g,
                        std::vector<std::string>* violations) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (violations) violations->push_back(msg);
  };
  std::set<Edge> seen_edges;
  for (int t = 0; t < static_cast<int>(ntd.nodes.size()); ++t) {
    const auto& n = ntd.nodes[t];
    switch (n.kind) {
      case NodeKind::Leaf:
        if (!n.bag.empty() || !n.children.empty()) fail("bad leaf node");
        break;
      case NodeKind::Introduce: {
        if (n.children.size() != 1) {
          fail("introduce node arity");
          break;
        }
        auto want = n.bag;
        auto it = std::find(want.begin(), want.end(), n.vertex);
        if (it == want.end()) {
          fail("introduced vertex not in bag");
          break;
        }
        want.erase(it);
        if (want != ntd.nodes[n.children[0]].bag) fail("introduce bag delta != 1");
        for (int y : want)
          if (g.has_vertex(n.vertex) && g.has_vertex(y) && g.has_edge(n.vertex, y))
            seen_edges.insert(make_edge(n.vertex, y));
        break;
      }
      case NodeKind::Forget: {
        if (n.children.size() != 1) {
          fail("forget node arity");
          break;
        }
        auto child = ntd.nodes[n.children[0]].bag;
        auto it = std::find(child.begin(), child.end(), n.vertex);
        if (it == child.end()) {
          fail("forgotten vertex not in child bag");
          break;
        }
        child.erase(it);
        if (child != n.bag) fail("forget bag delta != 1");
        break;
      }
      case NodeKind::Join:
        if (n.children.size() != 2 || ntd.nodes[n.children[0]].bag != n.bag ||
            ntd.nodes[n.children[1]].bag != n.bag)
          fail("join node must have two children with identical bags");
        break;
    }
  }
  if (ntd.nodes.empty() || !ntd.nodes[ntd.root].bag.empty()) fail("root bag not empty");
  for (int v : g.vertices()) {
    int tops = 0, count = 0;
    for (int t = 0; t < static_cast<int>(ntd.nodes.size()); ++t) {
      if (!contains(ntd.nodes[t].bag, v)) continue;
      ++count;
      int p = ntd.nodes[t].parent;
      if (p < 0 || !contains(ntd.nodes[p].bag, v)) ++tops;
    }
    if (count == 0) fail("vertex " + std::to_string(v) + " appears in no bag");
    else if (tops != 1) fail("occurrences of vertex " + std::to_string(v) + " disconnected");
  }
  // In a structurally valid nice decomposition, the lowest node holding both
  // endpoints of an edge is an introduce node, so this catches uncovered edges.
  for (const auto& e : g.edges())
    if (!seen_edges.count(e))
      fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
           ") covered by no bag");
  return ok;
}

TreeDecomposition add_apices(const TreeDecomposition& td, const std::vector<int>& apices) {
  TreeDecomposition out = td;
  if (apices.empty()) return out;
  std::vector<int> extra = apices;
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  for (auto& n : out.nodes) {
    std::vector<int> merged;
    std::set_union(n.bag.begin(), n.bag.end(), extra.begin(), extra.end(),
                   std::back_inserter(merged));
    n.bag = std::move(merged);
  }
  return out;
}

}  // namespace baker
