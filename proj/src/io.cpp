#include "baker/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace baker {

namespace {

std::vector<int> parse_ints(std::istringstream& ss) {
  std::vector<int> out;
  int x;
  while (ss >> x) out.push_back(x);
  if (!ss.eof()) throw InputError("malformed integer list");
  return out;
}

}  // namespace

GraphFile read_graph_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.push_back(raw);
  }
  if (lines.empty()) throw InputError("empty graph file");

  std::istringstream head(lines[0]);
  long long n, m;
  if (!(head >> n >> m) || n < 0 || m < 0) throw InputError("bad header line");
  if (1 + m > static_cast<long long>(lines.size())) throw InputError("missing edge lines");

  std::vector<int> verts(n);
  for (long long i = 0; i < n; ++i) verts[i] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    std::istringstream ss(lines[1 + i]);
    int u, v;
    if (!(ss >> u >> v)) throw InputError("bad edge line: " + lines[1 + i]);
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge vertex out of range");
    edges.push_back(make_edge(u, v));
  }

  std::vector<int> apex;
  std::map<int, std::vector<int>> rotation;
  bool has_rotation = false;
  std::vector<int> marked;
  for (size_t i = 1 + m; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string key;
    ss >> key;
    if (key == "apex:") {
      apex = parse_ints(ss);
    } else if (key == "rot") {
      int v;
      std::string colon;
      if (!(ss >> v >> colon) || colon != ":") throw InputError("bad rot line: " + lines[i]);
      rotation[v] = parse_ints(ss);
      has_rotation = true;
    } else if (key == "marked_faces:") {
      marked = parse_ints(ss);
    } else {
      throw InputError("unknown directive: " + lines[i]);
    }
  }

  GraphFile gf;
  gf.graph = Graph::from_edges(verts, edges, apex);
  if (has_rotation) gf.rotation = std::move(rotation);
  gf.marked_faces = std::move(marked);
  return gf;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph_file(in);
}

void write_graph_file(std::ostream& out, const Graph& g,
                      const std::map<int, std::vector<int>>* rotation,
                      const std::vector<int>* marked_faces) {
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  if (!g.apex_set().empty()) {
    out << "apex:";
    for (int a : g.apex_set()) out << " " << a;
    out << "\n";
  }
  if (rotation) {
    for (const auto& [v, order] : *rotation) {
      out << "rot " << v << ":";
      for (int w : order) out << " " << w;
      out << "\n";
    }
  }
  if (marked_faces && !marked_faces->empty()) {
    out << "marked_faces:";
    for (int f : *marked_faces) out << " " << f;
    out << "\n";
  }
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, const Graph& g) {
  out << "s td " << td.nodes.size() << " " << td.width() + 1 << " " << g.num_vertices()
      << "\n";
  for (size_t i = 0; i < td.nodes.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.nodes[i].bag) out << " " << v;
    out << "\n";
  }
  for (size_t i = 0; i < td.nodes.size(); ++i)
    if (td.nodes[i].parent >= 0) out << td.nodes[i].parent + 1 << " " << i + 1 << "\n";
}

std::vector<Embedding> embeddings_for(const GraphFile& gf) {
  Graph planar = gf.graph.without_apices();
  std::vector<Embedding> out;
  if (gf.rotation) {
    if (connected_components(planar).size() != 1)
      throw InputError("rotation blocks require a connected apex-free part");
    out.push_back(Embedding::from_rotation(planar, *gf.rotation));
  } else {
    for (const auto& comp : connected_components(planar))
      out.push_back(embed_planar(induced_subgraph(planar, comp)));
  }
  if (!gf.marked_faces.empty()) {
    if (out.size() != 1)
      throw InputError("marked faces require a connected apex-free part");
    out[0].set_marked_faces(gf.marked_faces);
  }
  return out;
}

Json faces_json(const Embedding& e) {
  Json faces = Json::array();
  for (const auto& f : e.faces()) {
    Json jf;
    jf["id"] = f.id;
    jf["boundary"] = f.boundary_vertices;
    jf["marked"] = f.marked;
    faces.push_back(std::move(jf));
  }
  Json j;
  j["faces"] = std::move(faces);
  j["outer"] = e.outer_face();
  return j;
}

Json layers_json(const std::vector<Embedding>& embeddings, int p) {
  PlanarDecomposition dec = build_layer_sets_multi(embeddings, p);
  int m = 0;
  for (const auto& l : dec.component_layerings) m = std::max(m, l.m);
  std::vector<std::vector<int>> layers(m + 1);
  std::set<int> bad;
  for (const auto& l : dec.component_layerings) {
    for (int i = 1; i <= l.m; ++i)
      layers[i].insert(layers[i].end(), l.layer(i).begin(), l.layer(i).end());
    bad.insert(l.bad_layers.begin(), l.bad_layers.end());
  }
  Json j;
  j["m"] = m;
  Json jl = Json::array();
  for (int i = 1; i <= m; ++i) {
    std::sort(layers[i].begin(), layers[i].end());
    jl.push_back(layers[i]);
  }
  j["layers"] = std::move(jl);
  j["bad_layers"] = std::vector<int>(bad.begin(), bad.end());
  j["residues"] = dec.plan.good_residues;
  Json jz = Json::array();
  for (const auto& z : dec.sets.z) jz.push_back(z);
  j["Z"] = std::move(jz);
  return j;
}

Json decompose_json(const WidthReport& report) {
  Json rows = Json::array();
  for (const auto& s : report.samples) {
    Json r;
    r["i"] = s.i;
    r["zprime"] = s.z_prime;
    r["quotient_n"] = s.quotient_n;
    r["quotient_m"] = s.quotient_m;
    r["width"] = s.width;
    r["ratio"] = s.ratio;
    rows.push_back(std::move(r));
  }
  Json j;
  j["p"] = report.p;
  j["rows"] = std::move(rows);
  j["max_ratio"] = report.max_ratio;
  return j;
}

Json solve_json(const Instance& inst, const std::optional<Solution>& sol,
                const BakerStats& stats, bool include_timing) {
  Json j;
  j["problem"] = inst.problem == Problem::OCT ? "oct" : "eb";
  j["k"] = inst.k;
  j["feasible"] = sol.has_value();
  if (sol) {
    j["size"] = sol->size();
    if (inst.problem == Problem::OCT) {
      j["deleted"] = sol->vertices;
    } else {
      Json del = Json::array();
      for (const auto& [u, v] : sol->edges) del.push_back(Json::array({u, v}));
      j["deleted"] = std::move(del);
    }
  } else {
    j["size"] = nullptr;
    j["deleted"] = Json::array();
  }
  Json st;
  st["pairs_tried"] = stats.pairs_total;
  st["pairs_solved"] = stats.pairs_solved;
  st["apex_combos"] = stats.apex_combos;
  st["max_width"] = stats.max_width;
  if (include_timing) st["wall_ms"] = stats.wall_ms;
  j["stats"] = std::move(st);
  return j;
}

}  // namespace baker
