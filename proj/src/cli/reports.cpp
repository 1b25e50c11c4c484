#include "cli/reports.hpp"

#include "weldlab/schema_io.hpp"

namespace weldlab::cli {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const MobiusMap& m) {
  return json::array({to_json(m.a()), to_json(m.b()), to_json(m.c()), to_json(m.d())});
}

json to_json(const OrbifoldSignature& s) {
  return {{"genus", s.genus},
          {"punctures", s.punctures},
          {"cone_points", s.cone_points},
          {"euler_characteristic", s.euler_characteristic()},
          {"in_class_f", s.in_class_f}};
}

json group_info(const GroupPreset& g) {
  json gens = json::array();
  for (int s = 1; s <= g.p(); ++s) {
    gens.push_back({{"s", s}, {"paired_with", g.sigma(s)}, {"self_paired", g.self_paired(s)},
                    {"matrix", to_json(g.generator(1, s))}});
  }
  json axis = nullptr;
  if (g.axis()) axis = json::array({g.axis()->theta1(), g.axis()->theta2()});
  return {{"group", g.label()},
          {"n", g.n()},
          {"p", g.p()},
          {"case", to_string(g.pairing_case())},
          {"sides", g.side_count()},
          {"sigma", g.sigma_table()},
          {"generators", gens},
          {"rotation", to_json(g.rotation())},
          {"axis", axis},
          {"inner_radius", g.polygon().inner_radius()},
          {"signature", to_json(orbifold_signature(g, false))},
          {"extended_signature", to_json(orbifold_signature(g, true))}};
}

json group_check(const GroupPreset& g, double tol) {
  const PairingReport pr = side_pairing_check(g);
  const CycleReport cr = poincare_check(g);
  json cycles = json::array();
  for (const auto& c : cr.cycles) {
    cycles.push_back({{"vertices", c.vertices}, {"sides", c.sides}, {"trace_residual", c.trace_residual},
                      {"identity", c.identity}});
  }
  json order_two = json::array();
  double worst_two = 0.0;
  for (const auto& [s, t] : cr.order_two_traces) {
    order_two.push_back({{"s", s}, {"trace", t}});
    worst_two = std::max(worst_two, t);
  }
  const bool ok = pr.max_residual < std::max(tol, 1e-8) && cr.max_trace_residual < 1e-7 && worst_two < 1e-9 &&
                  cr.rotation_order == g.n();
  return {{"group", g.label()},
          {"pairing_residuals", pr.residuals},
          {"max_pairing_residual", pr.max_residual},
          {"cycles", cycles},
          {"max_trace_residual", cr.max_trace_residual},
          {"order_two", order_two},
          {"rotation_order", cr.rotation_order},
          {"ok", ok}};
}

json markov_json(const BowenSeriesMap& m, const MarkovPartition& mp) {
  return {{"group", m.preset().label()},
          {"factor", m.factor()},
          {"degree", m.expected_degree()},
          {"breakpoints", mp.breakpoints},
          {"cover", mp.cover}};
}

json tiles_json(const std::vector<Tile>& tiles) {
  json out = json::array();
  for (const auto& t : tiles) {
    json verts = json::array();
    for (cplx v : t.vertices) verts.push_back(to_json(v));
    out.push_back({{"word", t.word}, {"sides", t.sides}, {"vertices", verts}});
  }
  return out;
}

json complex_json(const MatingSchema& schema, const BoundaryComplex& bc) {
  json arcs = json::array();
  for (int a = 0; a < bc.arc_count(); ++a) {
    arcs.push_back({{"label", bc.arc_label(a)},
                    {"partner", bc.arc_label(bc.s_action[a])},
                    {"next", bc.arc_label(bc.next_arc[a])},
                    {"face", bc.arc_face[a]},
                    {"start", bc.arc_start[a]},
                    {"end", bc.arc_end[a]}});
  }
  json faces = json::array();
  for (const auto& f : bc.faces) {
    json cycles = json::array();
    for (const auto& cyc : f.cycles) {
      json labels = json::array();
      for (int a : cyc) labels.push_back(bc.arc_label(a));
      cycles.push_back(labels);
    }
    faces.push_back({{"boundary", cycles}});
  }
  return {{"schema", schema.name},
          {"arcs", arcs},
          {"faces", faces},
          {"face_count", bc.face_count()},
          {"vertex_count", bc.vertex_count},
          {"clusters", bc.clusters},
          {"walks", bc.walks}};
}

json schema_report(const MatingSchema& schema, const BoundaryComplex& bc, bool polynomial_host) {
  json holes = json::array();
  for (const auto& h : bc.holes) {
    holes.push_back({{"slot", h.slot},
                     {"group", bc.slots[h.slot].label()},
                     {"p", h.p},
                     {"sigma", h.sigma},
                     {"fixed_corners", h.fixed_corners},
                     {"interior_fixed_sides", h.interior_fixed_sides}});
  }
  json degrees = nullptr;
  if (polynomial_host) {
    const DegreeReport d = validate_degrees(schema.slots);
    degrees = {{"polynomial", d.polynomial_degree}, {"correspondence", d.correspondence_degree}};
  }
  json out = {{"schema", schema.name},
              {"slots", schema_to_json(schema)["slots"]},
              {"holes", holes},
              {"degrees", degrees},
              {"order_two_total", order_two_total(bc)},
              {"face_count", bc.face_count()}};
  if (schema.polynomial) out["polynomial"] = polynomial_json(verify_polynomial(registry_entry(*schema.polynomial)));
  return out;
}

json polynomial_json(const PolynomialReport& r) {
  json crit = json::array();
  for (const auto& c : r.critical) {
    crit.push_back({{"z", to_json(c.z)},
                    {"multiplicity", c.multiplicity},
                    {"fixed_residual", c.fixed_residual},
                    {"vanishing_residual", c.vanishing_residual},
                    {"next_derivative", c.next_derivative}});
  }
  return {{"name", r.name},
          {"degree", r.degree},
          {"critical_points", crit},
          {"fixed_point_residual", r.fixed_point_residual},
          {"multiplicity_total", r.multiplicity_total}};
}

json surface_json(const BoundaryComplex& bc, const WeldedComplex& wc, const SurfaceReport& sr) {
  json comps = json::array();
  for (const auto& c : sr.components) {
    json eta_partner = nullptr;
    if (c.eta_partner >= 0) eta_partner = c.eta_partner;
    comps.push_back({{"genus", c.genus},
                     {"euler", c.euler},
                     {"vertices", c.vertices},
                     {"edges", c.edges},
                     {"faces", c.faces},
                     {"eta_invariant", c.eta_invariant},
                     {"eta_partner", eta_partner},
                     {"fixed_points", c.fixed_points}});
  }
  json out = {{"components", comps},
              {"component_count", sr.components.size()},
              {"connected", sr.connected()},
              {"total_euler", sr.total_euler},
              {"fixed_points", sr.fixed_points},
              {"order_two_total", order_two_total(bc)},
              {"zipped_euler", sr.zipped.euler},
              {"vertex_count", wc.vertex_count}};
  if (sr.connected()) {
    out["genus"] = sr.components[0].genus;
    out["genus_crosscheck"] = genus_crosscheck(sr, bc);
  } else {
    out["genus"] = nullptr;
    out["genus_crosscheck"] = nullptr;
  }
  return out;
}

json graph_json(const WeldingGraph& g, const GraphConsistency& c) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
  return {{"faces", g.faces},
          {"vertices", g.vertex_count()},
          {"edges", edges},
          {"component", g.component},
          {"component_count", g.component_count},
          {"consistency",
           {{"edge_symmetry", c.edge_symmetry},
            {"component_bijection", c.component_bijection},
            {"eta_equivalence", c.eta_equivalence}}}};
}

json zipped_json(const ZippedReport& z) {
  bool spheres = true;
  for (int e : z.euler) spheres = spheres && e == 2;
  return {{"euler", z.euler}, {"component_count", z.component_count()}, {"all_spheres", spheres}};
}

json fiber_json(const ModelTilingSet& m, const std::vector<ModelPoint>& fiber) {
  json pts = json::array();
  for (std::size_t k = 0; k < fiber.size(); ++k) {
    pts.push_back({{"w", to_json(m.value(fiber[k]))}, {"comp", fiber[k].comp}, {"tau_power", k}});
  }
  return {{"group", m.preset().label()},
          {"projection", to_json(m.project(fiber.front()))},
          {"fiber", pts},
          {"size", fiber.size()}};
}

json branches_json(const BranchReport& b) {
  json words = json::array();
  for (const auto& w : b.branches) words.push_back(w.text());
  return {{"branches", words},
          {"count", b.branches.size()},
          {"generating_residual", b.generating_residual},
          {"involution_residual", b.involution_residual},
          {"samples", b.samples}};
}

json tiling_json(const TilingReport& t, int length) {
  json words = json::array();
  for (const auto& tile : t.tiles) words.push_back(tile.word);
  return {{"length", length},
          {"tile_count", t.tiles.size()},
          {"words", words},
          {"samples_per_tile", t.samples_per_tile},
          {"checks", t.checks},
          {"overlaps", t.overlaps}};
}

json representation_json(const Representation& r) {
  json gens = json::array();
  for (const auto& g : r.generators) {
    gens.push_back({{"side", g.side},
                    {"word", g.word.text()},
                    {"order", g.order},
                    {"stabilizes_first", g.stabilizes_first},
                    {"residual", g.residual}});
  }
  return {{"generators", gens}, {"recovered_orders", r.recovered_orders}, {"signature_orders", r.signature_orders}};
}

}  // namespace weldlab::cli
