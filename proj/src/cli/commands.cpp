#include <fstream>
#include <iostream>

#include "cli/cli.hpp"
#include "cli/reports.hpp"
#include "weldlab/error.hpp"
#include "weldlab/render.hpp"
#include "weldlab/schema_io.hpp"

namespace weldlab::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::UsageError, "cannot write " + path);
  f << content;
}

void maybe_svg(const RunConfig& c, const RenderScene& scene) {
  if (!c.svg.empty()) write_file(c.svg, render_svg(scene));
}

GroupPreset preset_of(const RunConfig& c) { return build_group(c.n, c.p, parse_case(c.pairing)); }

MatingSchema schema_of(const RunConfig& c) { return c.newton ? newton_schema(*c.newton) : load_schema(c.input); }

json dispatch(const RunConfig& c) {
  const std::string& cmd = c.command;

  if (cmd == "group info") {
    const GroupPreset g = preset_of(c);
    maybe_svg(c, polygon_scene(g));
    return group_info(g);
  }
  if (cmd == "group check") return group_check(preset_of(c), default_tolerance());

  if (cmd.rfind("bs ", 0) == 0) {
    const BowenSeriesMap m(preset_of(c), c.factor);
    json out = {{"group", m.preset().label()}, {"factor", m.factor()}};
    if (cmd == "bs eval") {
      if (c.point.size() == 2) {
        const cplx z(c.point[0], c.point[1]);
        out["z"] = to_json(z);
        out["image"] = to_json(eval_pocket(m, z));
      } else {
        out["theta"] = c.theta;
        out["value"] = eval_circle(m, c.theta);
      }
    } else if (cmd == "bs orbit") {
      const Orbit o = orbit(m, c.theta, c.steps);
      out["angles"] = o.angles;
      out["hit_breakpoint"] = o.hit_breakpoint;
    } else if (cmd == "bs partition") {
      out = markov_json(m, markov_partition(m));
    } else if (cmd == "bs conjugacy") {
      const ConjugacyValue h = conjugacy_h(m, c.theta, c.depth);
      out["theta"] = c.theta;
      out["depth"] = c.depth;
      out["angle"] = h.angle;
      out["radius"] = h.radius;
      out["itinerary"] = h.itinerary;
    } else if (cmd == "bs tiles") {
      const std::vector<Tile> t = tiles(m, c.rank);
      maybe_svg(c, tiles_scene(m, t));
      out["rank"] = c.rank;
      out["count"] = t.size();
      out["tiles"] = tiles_json(t);
    }
    return out;
  }

  if (cmd == "mate verify-poly") {
    json list = json::array();
    for (const auto& entry : polynomial_registry()) {
      if (c.polynomial != "all" && c.polynomial != entry.name) continue;
      list.push_back(polynomial_json(verify_polynomial(entry)));
    }
    if (list.empty()) registry_entry(c.polynomial);  // reports the unknown name
    const AlphaSolution a = solve_septic_alpha();
    return {{"polynomials", list},
            {"alpha", {{"value", to_json(a.alpha)}, {"residual", a.residual}, {"iterations", a.iterations}}}};
  }

  if (cmd.rfind("mate ", 0) == 0 || cmd.rfind("surface ", 0) == 0) {
    const MatingSchema schema = schema_of(c);
    const BoundaryComplex bc = assemble(schema.slots, schema.contact);
    if (cmd == "mate build") {
      maybe_svg(c, hole_diagram_scene(bc));
      return complex_json(schema, bc);
    }
    if (cmd == "mate report") return schema_report(schema, bc, !c.newton);
    if (cmd == "surface zip") return zipped_json(zipped_report(bc));
    const WeldedComplex wc = weld(bc);
    const SurfaceReport sr = surface_report(wc);
    if (cmd == "surface report") {
      json out = surface_json(bc, wc, sr);
      out["schema"] = schema.name;
      return out;
    }
    const WeldingGraph g = welding_graph(bc);
    maybe_svg(c, welding_graph_scene(g));
    return graph_json(g, check_graph_consistency(g, wc, sr));
  }

  if (cmd.rfind("corr ", 0) == 0) {
    const GroupPreset g = preset_of(c);
    json out;
    if (cmd == "corr tiling") {
      const TilingReport t = group_tiling(g, c.length);
      maybe_svg(c, tiling_scene(g, t));
      out = tiling_json(t, c.length);
    } else {
      const ModelTilingSet m(g);
      if (cmd == "corr fibers") {
        const cplx w(c.point[0], c.point[1]);
        if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::OutsideDomain, "--w must lie in the open disk");
        out = fiber_json(m, m.fiber(m.make_point(w, c.component)));
      } else if (cmd == "corr branches") {
        out = branches_json(branch_words(m));
      } else {
        out = representation_json(recover_representation(m));
      }
      out["k_exponents"] = m.k_exponents();
    }
    out["group"] = g.label();
    return out;
  }

  throw Error(ErrorCode::UsageError, "unknown command '" + cmd + "'");
}

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

}  // namespace

void execute(const RunConfig& config, std::ostream& out) {
  if (config.tolerance) set_default_tolerance(*config.tolerance);
  json report = dispatch(config);
  report["command"] = config.command;
  report["schema_version"] = kSchemaVersion;
  const std::string text = report.dump(2) + "\n";
  if (config.output.empty()) {
    out << text;
  } else {
    write_file(config.output, text);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_config(args);
    if (!config.help.empty()) {
      out << config.help;
      return 0;
    }
    execute(config, out);
    return 0;
  } catch (const Error& e) {
    err << "weldlab: " << one_line(e.what()) << "\n";
    return e.code() == ErrorCode::UsageError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "weldlab: " << one_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace weldlab::cli
