#pragma once

#include <utility>
#include <vector>

#include "weldlab/mating_schema.hpp"

namespace weldlab {

// Vertices v_i^- = 2i and v_i^+ = 2i + 1 for each face Ω_i.
struct WeldingGraph {
  int faces = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j): joins v_i^- and v_j^+
  std::vector<int> component;              // per graph vertex
  int component_count = 0;

  static int minus(int i) { return 2 * i; }
  static int plus(int i) { return 2 * i + 1; }
  static int eta_hat(int v) { return v ^ 1; }
  int vertex_count() const { return 2 * faces; }
  bool has_edge(int i, int j) const;
};

WeldingGraph welding_graph(const BoundaryComplex& bc);

// Two copies of the domain; copy 0 is "+", copy 1 is "−". A corner instance
// (copy, a) is the point where arc a hands over to next_arc[a].
struct WeldedComplex {
  BoundaryComplex bc;
  int vertex_count = 0;
  std::vector<int> instance_vertex;  // index copy * arcs + a
  std::vector<int> vertex_eta;
  std::vector<int> face_component;   // index copy * faces + i
  std::vector<int> vertex_component;
  int component_count = 0;

  int instance(int copy, int arc) const { return copy * bc.arc_count() + arc; }
  int face_cell(int copy, int face) const { return copy * bc.face_count() + face; }
};

WeldedComplex weld(const BoundaryComplex& bc);

struct SurfaceComponent {
  int euler = 0;
  int genus = 0;
  bool eta_invariant = false;
  int eta_partner = -1;  // the swapped component when not invariant
  int fixed_points = 0;  // η-fixed vertices
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  std::vector<int> face_cells;
  int graph_component = -1;
};

struct ZippedReport {
  std::vector<int> euler;  // per component
  int component_count() const { return static_cast<int>(euler.size()); }
};

struct SurfaceReport {
  std::vector<SurfaceComponent> components;
  ZippedReport zipped;
  int total_euler = 0;
  int fixed_points = 0;
  bool connected() const { return components.size() == 1; }
};

SurfaceReport surface_report(const WeldedComplex& wc);

ZippedReport zipped_report(const BoundaryComplex& bc);

// Order-2 cone points summed over the extended signatures of the group slots.
// By default the cone of the half-turn of an n = 2 slot is left out: only the
// cones of order-2 side pairings sit over fixed points of S on the boundary.
int order_two_total(const BoundaryComplex& bc, bool include_rotation = false);

bool genus_crosscheck(const SurfaceReport& sr, const BoundaryComplex& bc);

struct GraphConsistency {
  bool edge_symmetry = false;
  bool component_bijection = false;
  // η-invariance of a component judged four ways (cells, index sets, η̂, fixed points) agrees.
  bool eta_equivalence = false;
};

GraphConsistency check_graph_consistency(const WeldingGraph& g, const WeldedComplex& wc, const SurfaceReport& sr);

}  // namespace weldlab
