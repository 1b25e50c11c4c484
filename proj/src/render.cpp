#include "weldlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace weldlab {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string palette(int i) { return kPalette[((i % 10) + 10) % 10]; }

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

cplx clamp_disk(cplx z, bool disk) {
  if (!disk) return z;
  const double r = std::abs(z);
  return r > 1.0 ? z / r : z;
}

// SVG has y pointing down.
std::string point(cplx z) { return num(z.real()) + " " + num(-z.imag()); }

std::string style_attrs(const Style& s) {
  std::string out = " stroke=\"" + s.stroke + "\" fill=\"" + s.fill + "\" stroke-width=\"" + num(s.width) + "\"";
  if (s.opacity < 1.0) out += " opacity=\"" + num(s.opacity) + "\"";
  if (s.dashed) out += " stroke-dasharray=\"" + num(4 * s.width) + " " + num(3 * s.width) + "\"";
  return out;
}

std::string segment(cplx a, cplx b, SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Line:
      return " L " + point(b);
    case SegmentKind::Geodesic: {
      const auto circle = geodesic_circle(a, b);
      if (!circle) return " L " + point(b);
      const cplx u = a - circle->center;
      const cplx v = b - circle->center;
      // flipping y turns counterclockwise into SVG's negative sweep direction
      const int sweep = (u.real() * v.imag() - u.imag() * v.real()) > 0 ? 0 : 1;
      return " A " + num(circle->radius) + " " + num(circle->radius) + " 0 0 " + std::to_string(sweep) + " " +
             point(b);
    }
    case SegmentKind::UnitArcCcw:
    case SegmentKind::UnitArcCw: {
      const bool ccw = kind == SegmentKind::UnitArcCcw;
      const double span = ccw ? ccw_distance(std::arg(a), std::arg(b)) : ccw_distance(std::arg(b), std::arg(a));
      return std::string(" A 1 1 0 ") + (span > std::numbers::pi ? "1" : "0") + (ccw ? " 0 " : " 1 ") + point(b);
    }
  }
  return "";
}

std::string path_data(const PathShape& p, bool disk) {
  if (p.points.empty()) return "";
  std::string d = "M " + point(clamp_disk(p.points[0], disk));
  const std::size_t count = p.closed ? p.points.size() : p.points.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    const cplx a = clamp_disk(p.points[i], disk);
    const cplx b = clamp_disk(p.points[(i + 1) % p.points.size()], disk);
    const SegmentKind kind = i < p.kinds.size() ? p.kinds[i] : SegmentKind::Line;
    d += segment(a, b, kind);
  }
  if (p.closed) d += " Z";
  return d;
}

Layer unit_circle_layer() {
  Layer l{"disk", true, {}};
  l.shapes.push_back(CircleShape{0.0, 1.0, Style{"#333333", "#ffffff", 0.006}});
  return l;
}

std::vector<cplx> ideal_vertices(const GroupPreset& g) {
  std::vector<cplx> out;
  for (double t : g.polygon().vertices()) out.push_back(unit(t));
  return out;
}

}  // namespace

std::string render_svg(const RenderScene& scene) {
  const double w = scene.xmax - scene.xmin;
  const double h = scene.ymax - scene.ymin;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(scene.xmin) + " " + num(-scene.ymax) + " " +
         num(w) + " " + num(h) + "\" width=\"800\" height=\"" + num(800.0 * h / w) + "\">\n";
  for (const Layer& layer : scene.layers) {
    out += "<g id=\"" + escape(layer.name) + "\">\n";
    for (const Shape& shape : layer.shapes) {
      if (const auto* p = std::get_if<PathShape>(&shape)) {
        out += "<path d=\"" + path_data(*p, layer.disk) + "\"" + style_attrs(p->style) + "/>\n";
      } else if (const auto* c = std::get_if<CircleShape>(&shape)) {
        const cplx z = clamp_disk(c->center, layer.disk);
        out += "<circle cx=\"" + num(z.real()) + "\" cy=\"" + num(-z.imag()) + "\" r=\"" + num(c->radius) + "\"" +
               style_attrs(c->style) + "/>\n";
      } else if (const auto* t = std::get_if<LabelShape>(&shape)) {
        const cplx z = clamp_disk(t->at, layer.disk);
        out += "<text x=\"" + num(z.real()) + "\" y=\"" + num(-z.imag()) + "\" font-size=\"" + num(t->size) +
               "\" fill=\"" + t->color + "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               escape(t->text) + "</text>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

PathShape geodesic_polygon(const std::vector<cplx>& points, Style style) {
  PathShape p;
  p.points = points;
  p.kinds.assign(points.size(), SegmentKind::Geodesic);
  p.closed = true;
  p.style = std::move(style);
  return p;
}

RenderScene polygon_scene(const GroupPreset& g, bool pockets) {
  RenderScene scene;
  scene.layers.push_back(unit_circle_layer());
  const std::vector<cplx> verts = ideal_vertices(g);
  const int count = g.side_count();

  if (pockets) {
    Layer l{"pockets", true, {}};
    for (int k = 0; k < count; ++k) {
      PathShape p;
      p.points = {verts[k], verts[(k + 1) % count]};
      p.kinds = {SegmentKind::Geodesic, SegmentKind::UnitArcCw};
      p.closed = true;
      p.style = Style{"#c0561b", "#f2a65a", 0.003, 0.8};
      l.shapes.push_back(p);
    }
    scene.layers.push_back(std::move(l));
  }

  Layer poly{"polygon", true, {}};
  poly.shapes.push_back(geodesic_polygon(verts, Style{"#1f3a5f", "#dce6f2", 0.006}));
  if (g.axis()) {
    PathShape axis;
    axis.points = {g.axis()->endpoint1(), g.axis()->endpoint2()};
    axis.kinds = {SegmentKind::Geodesic};
    axis.style = Style{"#555555", "none", 0.004, 1.0, true};
    poly.shapes.push_back(axis);
  }
  scene.layers.push_back(std::move(poly));

  Layer labels{"labels", true, {}};
  for (int k = 0; k < count; ++k) {
    const cplx mid = g.polygon().sides()[k].sample(0.5);
    labels.shapes.push_back(
        LabelShape{mid * 0.85, std::to_string(k / g.p() + 1) + "," + std::to_string(k % g.p() + 1), 0.06});
  }
  scene.layers.push_back(std::move(labels));
  return scene;
}

RenderScene tiling_scene(const GroupPreset& g, const TilingReport& t) {
  RenderScene scene;
  scene.layers.push_back(unit_circle_layer());
  const std::vector<cplx> verts = ideal_vertices(g);
  std::vector<cplx> domain;
  if (g.n() == 1) {
    domain = verts;
  } else {
    domain.push_back(0.0);
    for (int k = 0; k <= g.p(); ++k) domain.push_back(verts[k % g.side_count()]);
  }
  Layer tiles{"tiles", true, {}};
  for (const TilingTile& tile : t.tiles) {
    std::vector<cplx> image;
    for (cplx z : domain) image.push_back(tile.element(z));
    const bool even = tile.length % 2 == 0;
    tiles.shapes.push_back(geodesic_polygon(image, Style{"#1f3a5f", even ? "#dce6f2" : "#f7d7b5", 0.002}));
  }
  scene.layers.push_back(std::move(tiles));
  return scene;
}

RenderScene tiles_scene(const BowenSeriesMap& m, const std::vector<Tile>& tiles) {
  RenderScene scene = polygon_scene(m.preset(), false);
  const std::vector<cplx> verts = ideal_vertices(m.preset());
  Layer l{"tiles", true, {}};
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    std::vector<cplx> image;
    for (cplx z : verts) image.push_back(tiles[i].element(z));
    const int first = tiles[i].sides.empty() ? 0 : tiles[i].sides.front();
    l.shapes.push_back(geodesic_polygon(image, Style{"#333333", palette(first), 0.002, 0.7}));
  }
  scene.layers.push_back(std::move(l));
  return scene;
}

RenderScene hole_diagram_scene(const BoundaryComplex& bc) {
  RenderScene scene;
  scene.xmin = scene.ymin = -2.0;
  scene.xmax = scene.ymax = 2.0;

  const int holes = static_cast<int>(bc.holes.size());
  const double ring = holes > 1 ? 1.0 : 0.0;
  const double size = holes > 1 ? std::min(0.6, 0.8 * std::sin(std::numbers::pi / holes)) : 0.8;

  std::map<CornerRef, cplx> corner_at;
  Layer shapes{"holes", false, {}};
  Layer labels{"labels", false, {}};
  for (int h = 0; h < holes; ++h) {
    const HoleBoundary& hole = bc.holes[h];
    const cplx c = std::polar(ring, kTwoPi * h / std::max(holes, 1));
    const double phi0 = holes > 1 ? std::arg(-c) : 0.0;
    const Style style{"#1f3a5f", palette(h), 0.012, 0.85};
    if (hole.p == 1) {
      const cplx corner = c + std::polar(size, phi0);
      corner_at[{hole.slot, 0}] = corner;
      shapes.shapes.push_back(CircleShape{c, size, style});
      labels.shapes.push_back(LabelShape{c - std::polar(0.6 * size, phi0), "1", 0.12});
    } else {
      PathShape p;
      p.closed = true;
      p.style = style;
      for (int k = 0; k < hole.p; ++k) {
        const cplx corner = c + std::polar(size, phi0 + kTwoPi * k / hole.p);
        corner_at[{hole.slot, k}] = corner;
        p.points.push_back(corner);
      }
      p.kinds.assign(hole.p, SegmentKind::Line);
      shapes.shapes.push_back(p);
      for (int s = 1; s <= hole.p; ++s) {
        const cplx mid = 0.5 * (p.points[s - 1] + p.points[s % hole.p]);
        labels.shapes.push_back(LabelShape{c + 0.75 * (mid - c), std::to_string(s), 0.12});
      }
    }
    labels.shapes.push_back(LabelShape{c, bc.slots[hole.slot].label(), 0.1, "#333333"});
  }

  Layer contacts{"contacts", false, {}};
  for (const auto& corners : bc.vertex_corners) {
    if (corners.empty()) continue;
    cplx centre = 0.0;
    for (const auto& cr : corners) centre += corner_at[cr];
    centre /= static_cast<double>(corners.size());
    for (const auto& cr : corners) {
      if (std::abs(corner_at[cr] - centre) > 1e-9) {
        PathShape line;
        line.points = {corner_at[cr], centre};
        line.kinds = {SegmentKind::Line};
        line.style = Style{"#333333", "none", 0.01, 1.0, corners.size() > 1};
        contacts.shapes.push_back(line);
      }
    }
    contacts.shapes.push_back(CircleShape{centre, 0.04, Style{"#000000", "#000000", 0.0}});
  }

  int b = 0;
  for (std::size_t i = 0; i < bc.slots.size(); ++i) {
    if (bc.hole_of_slot[i] >= 0) continue;
    const cplx at(-1.7 + 0.5 * b++, -1.8);
    shapes.shapes.push_back(CircleShape{at, 0.15, Style{"#555555", "#e0e0e0", 0.01}});
    labels.shapes.push_back(LabelShape{at, bc.slots[i].label(), 0.08});
  }

  scene.layers.push_back(std::move(shapes));
  scene.layers.push_back(std::move(contacts));
  scene.layers.push_back(std::move(labels));
  return scene;
}

RenderScene welding_graph_scene(const WeldingGraph& g) {
  RenderScene scene;
  scene.xmin = -0.75;
  scene.xmax = std::max(g.faces, 1) - 0.25;
  scene.ymin = -1.0;
  scene.ymax = 1.0;
  auto at = [](int v) { return cplx(v / 2, (v % 2 == 0) ? 0.5 : -0.5); };

  Layer edges{"edges", false, {}};
  for (const auto& [i, j] : g.edges) {
    PathShape line;
    line.points = {at(WeldingGraph::minus(i)), at(WeldingGraph::plus(j))};
    line.kinds = {SegmentKind::Line};
    line.style = Style{palette(g.component[WeldingGraph::minus(i)]), "none", 0.03};
    edges.shapes.push_back(line);
  }
  Layer vertices{"vertices", false, {}};
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string colour = palette(g.component[v]);
    vertices.shapes.push_back(CircleShape{at(v), 0.09, Style{"#000000", colour, 0.01}});
    const std::string name = "F" + std::to_string(v / 2 + 1) + (v % 2 == 0 ? "-" : "+");
    vertices.shapes.push_back(LabelShape{at(v) + cplx(0, v % 2 == 0 ? 0.22 : -0.22), name, 0.12});
  }
  scene.layers.push_back(std::move(edges));
  scene.layers.push_back(std::move(vertices));
  return scene;
}

}  // namespace weldlab
