#include <string>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "weldlab/render.hpp"

using namespace weldlab;

namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("empty scene") {
  const std::string svg = render_svg(RenderScene{});
  CHECK(svg.find("viewBox=\"-1.050000 -1.050000 2.100000 2.100000\"") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("geodesic sides are drawn as orthogonal circle arcs") {
  // the side of the ideal square from 1 to i lies on the circle |z - (1+i)| = 1;
  // on screen (y down) the centre is (1, -1) and the arc runs from screen angle
  // 90° to 180°, i.e. in the increasing direction, which SVG calls sweep 1
  const std::string svg = render_svg(polygon_scene(build_group(1, 4, PairingCase::CaseI)));
  CHECK(svg.find("M 1.000000 0.000000 A 1.000000 1.000000 0 0 1 0.000000 -1.000000") != std::string::npos);
  // the pocket closes along the unit circle from i back to 1, clockwise in the plane
  CHECK(svg.find("0.000000 -1.000000 A 1 1 0 0 1 1.000000 0.000000") != std::string::npos);
  CHECK(count(svg, "<g ") == count(svg, "</g>"));
  CHECK(count(svg, "<path") == 4 + 1 + 1);  // pockets, polygon, axis
}

TEST_CASE("points outside the disk are clamped") {
  RenderScene scene;
  Layer l{"x", true, {}};
  PathShape p;
  p.points = {cplx(0.0), cplx(1.0 + 1e-7, 0.0)};
  p.kinds = {SegmentKind::Line};
  l.shapes.push_back(p);
  scene.layers.push_back(l);
  CHECK(render_svg(scene).find("L 1.000000 0.000000") != std::string::npos);
}

TEST_CASE("scenes are deterministic") {
  const GroupPreset g = build_group(3, 1, PairingCase::CaseI);
  const TilingReport t = group_tiling(g, 3);
  CHECK(render_svg(tiling_scene(g, t)) == render_svg(tiling_scene(g, t)));
  CHECK(count(render_svg(tiling_scene(g, t)), "<path") == static_cast<int>(t.tiles.size()));

  const MatingSchema newton = newton_schema(6);
  const BoundaryComplex bc = assemble(newton.slots, newton.contact);
  const std::string holes = render_svg(hole_diagram_scene(bc));
  CHECK(count(holes, "<circle") == 6 + 1);  // six teardrops and the shared corner
  CHECK(holes == render_svg(hole_diagram_scene(bc)));

  const MatingSchema two = fixture("two_squares");
  const WeldingGraph wg = welding_graph(assemble(two.slots, two.contact));
  const std::string graph = render_svg(welding_graph_scene(wg));
  CHECK(count(graph, "<circle") == 8);
  CHECK(count(graph, "<path") == static_cast<int>(wg.edges.size()));
}
