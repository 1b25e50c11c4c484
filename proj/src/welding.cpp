#include "weldlab/welding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Relabel roots as 0, 1, ... in order of first appearance.
  std::vector<int> labels(int& count) {
    std::vector<int> out(parent.size());
    std::map<int, int> id;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      const int r = find(static_cast<int>(i));
      auto it = id.find(r);
      if (it == id.end()) it = id.emplace(r, static_cast<int>(id.size())).first;
      out[i] = it->second;
    }
    count = static_cast<int>(id.size());
    return out;
  }
};

}  // namespace

bool WeldingGraph::has_edge(int i, int j) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

WeldingGraph welding_graph(const BoundaryComplex& bc) {
  WeldingGraph g;
  g.faces = bc.face_count();
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < bc.arc_count(); ++a) edges.insert({bc.arc_face[a], bc.arc_face[bc.s_action[a]]});
  g.edges.assign(edges.begin(), edges.end());
  UnionFind uf(g.vertex_count());
  for (const auto& [i, j] : g.edges) uf.unite(WeldingGraph::minus(i), WeldingGraph::plus(j));
  g.component = uf.labels(g.component_count);
  return g;
}

WeldedComplex weld(const BoundaryComplex& bc) {
  WeldedComplex wc;
  wc.bc = bc;
  const int arcs = bc.arc_count();
  const int faces = bc.face_count();

  UnionFind corners(2 * arcs);
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 0; a < arcs; ++a) {
      const int b = bc.next_arc[a];
      corners.unite(wc.instance(copy, a), wc.instance(1 - copy, bc.s_action[b]));
    }
  }
  wc.instance_vertex = corners.labels(wc.vertex_count);

  // Every class must sit over a single S-orbit of complex vertices, and η must permute classes.
  std::vector<std::set<int>> orbit(wc.vertex_count);
  wc.vertex_eta.assign(wc.vertex_count, -1);
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 0; a < arcs; ++a) {
      const int v = wc.instance_vertex[wc.instance(copy, a)];
      const int base = bc.arc_end[a];
      orbit[v].insert(std::min(base, bc.vertex_s_action[base]));
      const int image = wc.instance_vertex[wc.instance(1 - copy, a)];
      if (wc.vertex_eta[v] >= 0 && wc.vertex_eta[v] != image) {
        throw Error(ErrorCode::GluingInconsistency, "η is not well defined on welded vertices");
      }
      wc.vertex_eta[v] = image;
    }
  }
  for (int v = 0; v < wc.vertex_count; ++v) {
    if (orbit[v].size() != 1) {
      throw Error(ErrorCode::GluingInconsistency,
                  "welded vertex " + std::to_string(v) + " joins unrelated boundary points");
    }
  }

  UnionFind cells(2 * faces);
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 0; a < arcs; ++a) {
      cells.unite(wc.face_cell(copy, bc.arc_face[a]), wc.face_cell(1 - copy, bc.arc_face[bc.s_action[a]]));
    }
  }
  wc.face_component = cells.labels(wc.component_count);
  wc.vertex_component.assign(wc.vertex_count, -1);
  for (int copy = 0; copy < 2; ++copy) {
    for (int a = 0; a < arcs; ++a) {
      wc.vertex_component[wc.instance_vertex[wc.instance(copy, a)]] =
          wc.face_component[wc.face_cell(copy, bc.arc_face[a])];
    }
  }
  return wc;
}

ZippedReport zipped_report(const BoundaryComplex& bc) {
  const int arcs = bc.arc_count();
  const int faces = bc.face_count();
  UnionFind corners(arcs);
  for (int a = 0; a < arcs; ++a) corners.unite(a, bc.s_action[bc.next_arc[a]]);
  int vertex_count = 0;
  const std::vector<int> vertex = corners.labels(vertex_count);

  UnionFind cells(faces);
  for (int a = 0; a < arcs; ++a) cells.unite(bc.arc_face[a], bc.arc_face[bc.s_action[a]]);
  int components = 0;
  const std::vector<int> face_component = cells.labels(components);

  ZippedReport report;
  report.euler.assign(components, 0);
  std::vector<bool> counted(vertex_count, false);
  for (int a = 0; a < arcs; ++a) {
    const int c = face_component[bc.arc_face[a]];
    if (!counted[vertex[a]]) {
      counted[vertex[a]] = true;
      report.euler[c] += 1;
    }
    if (a < bc.s_action[a]) report.euler[c] -= 1;
  }
  for (int f = 0; f < faces; ++f) {
    report.euler[face_component[f]] += 2 - static_cast<int>(bc.faces[f].cycles.size());
  }
  for (int c = 0; c < components; ++c) {
    if (report.euler[c] != 2) {
      throw Error(ErrorCode::ZipNotSphere, "zipped component " + std::to_string(c) +
                                               " has Euler characteristic " + std::to_string(report.euler[c]));
    }
  }
  return report;
}

SurfaceReport surface_report(const WeldedComplex& wc) {
  const BoundaryComplex& bc = wc.bc;
  const int arcs = bc.arc_count();
  const int faces = bc.face_count();
  SurfaceReport sr;
  sr.components.resize(wc.component_count);
  for (int v = 0; v < wc.vertex_count; ++v) {
    SurfaceComponent& c = sr.components[wc.vertex_component[v]];
    c.vertices += 1;
    if (wc.vertex_eta[v] == v) c.fixed_points += 1;
  }
  for (int a = 0; a < arcs; ++a) sr.components[wc.face_component[wc.face_cell(0, bc.arc_face[a])]].edges += 1;
  for (int copy = 0; copy < 2; ++copy) {
    for (int f = 0; f < faces; ++f) {
      const int cell = wc.face_cell(copy, f);
      SurfaceComponent& c = sr.components[wc.face_component[cell]];
      c.faces += 1;
      c.face_cells.push_back(cell);
      c.euler += 2 - static_cast<int>(bc.faces[f].cycles.size());
    }
  }
  for (int k = 0; k < wc.component_count; ++k) {
    SurfaceComponent& c = sr.components[k];
    c.euler += c.vertices - c.edges;
    if ((2 - c.euler) % 2 != 0) {
      throw Error(ErrorCode::GluingInconsistency, "component with odd Euler characteristic");
    }
    c.genus = (2 - c.euler) / 2;
    const int cell = c.face_cells.front();
    const int copy = cell / faces;
    const int partner = wc.face_component[wc.face_cell(1 - copy, cell % faces)];
    c.eta_invariant = partner == k;
    c.eta_partner = c.eta_invariant ? -1 : partner;
    sr.total_euler += c.euler;
    sr.fixed_points += c.fixed_points;
  }
  const WeldingGraph g = welding_graph(bc);
  for (SurfaceComponent& c : sr.components) {
    const int cell = c.face_cells.front();
    const int copy = cell / faces;
    const int face = cell % faces;
    c.graph_component = g.component[copy == 0 ? WeldingGraph::plus(face) : WeldingGraph::minus(face)];
  }
  sr.zipped = zipped_report(bc);
  return sr;
}

int order_two_total(const BoundaryComplex& bc, bool include_rotation) {
  int b = 0;
  for (const Slot& s : bc.slots) {
    if (s.kind != SlotKind::Group) continue;
    b += orbifold_signature(build_group(s.n, s.p, s.pairing), true).count_order(2);
    // the half-turn z ↦ -z of an n = 2 slot fixes no boundary point of the domain
    if (s.n == 2 && !include_rotation) --b;
  }
  return b;
}

bool genus_crosscheck(const SurfaceReport& sr, const BoundaryComplex& bc) {
  if (!sr.connected()) {
    throw Error(ErrorCode::PreconditionViolation, "genus cross-check needs a connected surface");
  }
  const SurfaceComponent& c = sr.components.front();
  if (c.fixed_points % 2 != 0 || c.genus != (c.fixed_points - 2) / 2) {
    throw Error(ErrorCode::CrosscheckFailed,
                "genus " + std::to_string(c.genus) + " but " + std::to_string(c.fixed_points) +
                    " fixed points of η");
  }
  const int b = order_two_total(bc);
  if (b >= 3 && c.genus < 1) {
    throw Error(ErrorCode::CrosscheckFailed,
                std::to_string(b) + " order-2 points but genus " + std::to_string(c.genus));
  }
  return true;
}

GraphConsistency check_graph_consistency(const WeldingGraph& g, const WeldedComplex& wc,
                                         const SurfaceReport& sr) {
  GraphConsistency out;
  out.edge_symmetry = std::all_of(g.edges.begin(), g.edges.end(),
                                  [&](const std::pair<int, int>& e) { return g.has_edge(e.second, e.first); });

  const int faces = g.faces;
  // Cell component ↔ graph component, with v_i^+ for copy 0 and v_i^- for copy 1.
  std::map<int, int> forward;
  std::map<int, int> backward;
  bool bijection = g.component_count == wc.component_count;
  for (int copy = 0; copy < 2; ++copy) {
    for (int f = 0; f < faces; ++f) {
      const int cell_comp = wc.face_component[wc.face_cell(copy, f)];
      const int graph_comp = g.component[copy == 0 ? WeldingGraph::plus(f) : WeldingGraph::minus(f)];
      auto [it1, new1] = forward.emplace(cell_comp, graph_comp);
      auto [it2, new2] = backward.emplace(graph_comp, cell_comp);
      if (it1->second != graph_comp || it2->second != cell_comp) bijection = false;
    }
  }
  out.component_bijection = bijection;

  bool agree = true;
  for (int k = 0; k < static_cast<int>(sr.components.size()); ++k) {
    const SurfaceComponent& c = sr.components[k];
    const bool cells = c.eta_invariant;
    const int gc = c.graph_component;
    std::set<int> minus_idx;
    std::set<int> plus_idx;
    for (int i = 0; i < faces; ++i) {
      if (g.component[WeldingGraph::minus(i)] == gc) minus_idx.insert(i);
      if (g.component[WeldingGraph::plus(i)] == gc) plus_idx.insert(i);
    }
    const bool index_sets = std::any_of(minus_idx.begin(), minus_idx.end(),
                                        [&](int i) { return plus_idx.count(i) > 0; });
    bool hat_invariant = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.component[v] == gc && g.component[WeldingGraph::eta_hat(v)] != gc) hat_invariant = false;
    }
    const bool fixed = c.fixed_points > 0;
    if (!(cells == index_sets && index_sets == hat_invariant && hat_invariant == fixed)) agree = false;
  }
  out.eta_equivalence = agree;
  return out;
}

}  // namespace weldlab
