#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weldlab/fuchsian.hpp"
#include "weldlab/hyperbolic.hpp"

namespace weldlab {

// One continuous piece of the circle map: on the closed arc [alpha, beta]
// (beta may exceed 2π) the map is x ↦ lift · arg(map(exp(i x / lift))).
struct Branch {
  int side = 0;  // side index of the pocket in Π
  double alpha = 0.0;
  double beta = 0.0;
  MobiusMap map;
  int lift = 1;
};

class BowenSeriesMap {
 public:
  BowenSeriesMap(GroupPreset preset, bool factor);

  const GroupPreset& preset() const { return preset_; }
  bool factor() const { return factor_; }
  const std::vector<Branch>& branches() const { return branches_; }
  double marked_fixed_angle() const { return marked_fixed_angle_; }
  int expected_degree() const { return preset_.side_count() - 1; }
  // Continuous on the whole circle (n = 1, or the factor map).
  bool continuous() const { return factor_ || preset_.n() == 1; }

  // Value of a branch at x in its closed arc.
  double branch_value(const Branch& b, double x) const;

  // All angles fixed by the circle map, sorted in [0, 2π).
  std::vector<double> fixed_angles() const;

 private:
  GroupPreset preset_;
  bool factor_;
  std::vector<Branch> branches_;
  double marked_fixed_angle_ = 0.0;
};

double eval_circle(const BowenSeriesMap& m, double theta);

// The n values (g(ζ))ⁿ over the n roots ζ of e^{iφ}, using the unfactored pocket maps.
std::vector<double> factor_lift_values(const BowenSeriesMap& m, double phi);

cplx eval_pocket(const BowenSeriesMap& m, cplx z);

// Preimages of theta under the circle map, sorted and de-duplicated.
std::vector<double> circle_preimages(const BowenSeriesMap& m, double theta);

int circle_degree(const BowenSeriesMap& m);

struct MarkovPartition {
  std::vector<double> breakpoints;      // sorted, arc j = [b_j, b_{j+1}]
  std::vector<MobiusMap> branch_maps;   // per arc
  std::vector<std::vector<int>> cover;  // cover[i][j] = times arc i's image covers arc j
  std::vector<std::vector<bool>> transition() const;
  int arcs() const { return static_cast<int>(breakpoints.size()); }
};

MarkovPartition markov_partition(const BowenSeriesMap& m);

struct Orbit {
  std::vector<double> angles;
  bool hit_breakpoint = false;
};

Orbit orbit(const BowenSeriesMap& m, double theta, int steps);

struct ConjugacyValue {
  double angle = 0.0;
  double radius = 0.0;  // half-width of the itinerary arc
  std::vector<int> itinerary;
};

// h(e^{iθ}) where h ∘ z^d = A ∘ h and h(1) is the marked fixed point.
ConjugacyValue conjugacy_h(const BowenSeriesMap& m, double theta, int depth,
                           std::optional<double> max_width = std::nullopt);

struct Tile {
  std::vector<int> sides;  // pocket sequence t_1..t_k (side indices)
  std::string word;
  MobiusMap element;       // tile = element(Π), before projection
  std::vector<cplx> vertices;
};

inline constexpr int kMaxTileRank = 8;

std::vector<Tile> tiles(const BowenSeriesMap& m, int rank);

// Whether z lies in the interior of the tile (in the map's own coordinate).
bool tile_contains(const BowenSeriesMap& m, const Tile& t, cplx z, double margin = 1e-9);

// Winding number of the factor branch s around its zero (g_s⁻¹(0))ⁿ.
int critical_local_degree(const BowenSeriesMap& m, int s);

}  // namespace weldlab
