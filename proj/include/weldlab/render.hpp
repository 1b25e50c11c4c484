#pragma once

#include <string>
#include <variant>
#include <vector>

#include "weldlab/bowen_series.hpp"
#include "weldlab/correspondence.hpp"
#include "weldlab/welding.hpp"

namespace weldlab {

struct Style {
  std::string stroke = "#000000";
  std::string fill = "none";
  double width = 0.004;
  double opacity = 1.0;
  bool dashed = false;
};

enum class SegmentKind { Line, Geodesic, UnitArcCcw, UnitArcCw };

// A path through `points`; segment i joins points[i] and points[i+1] (and the
// last point back to the first when closed).
struct PathShape {
  std::vector<cplx> points;
  std::vector<SegmentKind> kinds;
  bool closed = false;
  Style style;
};

struct CircleShape {
  cplx center;
  double radius = 0.0;
  Style style;
};

struct LabelShape {
  cplx at;
  std::string text;
  double size = 0.05;
  std::string color = "#000000";
};

using Shape = std::variant<PathShape, CircleShape, LabelShape>;

struct Layer {
  std::string name;
  bool disk = true;  // clamp to the closed unit disk
  std::vector<Shape> shapes;
};

struct RenderScene {
  double xmin = -1.05, ymin = -1.05, xmax = 1.05, ymax = 1.05;
  std::vector<Layer> layers;
};

std::string render_svg(const RenderScene& scene);

// Closed geodesic polygon through the given points.
PathShape geodesic_polygon(const std::vector<cplx>& points, Style style);

RenderScene polygon_scene(const GroupPreset& g, bool pockets = true);
RenderScene tiling_scene(const GroupPreset& g, const TilingReport& t);
RenderScene tiles_scene(const BowenSeriesMap& m, const std::vector<Tile>& tiles);
RenderScene hole_diagram_scene(const BoundaryComplex& bc);
RenderScene welding_graph_scene(const WeldingGraph& g);

}  // namespace weldlab
