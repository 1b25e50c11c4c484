#pragma once

#include "json.hpp"
#include "weldlab/bowen_series.hpp"
#include "weldlab/correspondence.hpp"
#include "weldlab/welding.hpp"

namespace weldlab::cli {

using nlohmann::json;

json to_json(cplx z);
json to_json(const MobiusMap& m);
json to_json(const OrbifoldSignature& s);

json group_info(const GroupPreset& g);
json group_check(const GroupPreset& g, double tol);

json markov_json(const BowenSeriesMap& m, const MarkovPartition& mp);
json tiles_json(const std::vector<Tile>& tiles);

json complex_json(const MatingSchema& schema, const BoundaryComplex& bc);
// Degrees are only meaningful when the host map is a polynomial (not for Newton schemas).
json schema_report(const MatingSchema& schema, const BoundaryComplex& bc, bool polynomial_host);
json polynomial_json(const PolynomialReport& r);

json surface_json(const BoundaryComplex& bc, const WeldedComplex& wc, const SurfaceReport& sr);
json graph_json(const WeldingGraph& g, const GraphConsistency& c);
json zipped_json(const ZippedReport& z);

json fiber_json(const ModelTilingSet& m, const std::vector<ModelPoint>& fiber);
json branches_json(const BranchReport& b);
json tiling_json(const TilingReport& t, int length);
json representation_json(const Representation& r);

}  // namespace weldlab::cli
