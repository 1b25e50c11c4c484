#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weldlab/fuchsian.hpp"

namespace weldlab {

// A point of D × {1..p}. The disk coordinate is ω^rot · base with ω = e^{2πi/n};
// τ only touches the integer fields, so its relations hold exactly.
struct ModelPoint {
  cplx base{0.0};
  int rot = 0;   // in [0, n)
  int comp = 1;  // in [1, p]

  bool operator==(const ModelPoint&) const = default;
};

class ModelTilingSet {
 public:
  explicit ModelTilingSet(GroupPreset preset);

  const GroupPreset& preset() const { return preset_; }
  int n() const { return preset_.n(); }
  int p() const { return preset_.p(); }
  int degree() const { return preset_.side_count(); }
  // k_j for j = 1..p, in [0, np)
  const std::vector<int>& k_exponents() const { return k_; }

  ModelPoint make_point(cplx w, int comp) const;
  cplx value(const ModelPoint& z) const;
  cplx project(const ModelPoint& z) const;  // (w, j) ↦ wⁿ

  ModelPoint tau(const ModelPoint& z, int k = 1) const;
  ModelPoint eta(const ModelPoint& z) const;

  // Points related by τ (the full fiber of the projection), ordered by τ-power.
  std::vector<ModelPoint> fiber(const ModelPoint& z) const;

  bool same_point(const ModelPoint& a, const ModelPoint& b, double tol = 1e-12) const;

 private:
  GroupPreset preset_;
  std::vector<MobiusMap> eta_maps_;
  std::vector<int> k_;
};

// Letters act right to left: the last letter is applied first.
struct ModelLetter {
  bool eta = false;
  int tau_power = 0;
};

struct ModelWord {
  std::vector<ModelLetter> letters;

  static ModelWord tau(int k);
  static ModelWord eta();
  ModelWord then(const ModelWord& first) const;  // this ∘ first
  std::string text() const;
};

ModelPoint apply(const ModelTilingSet& m, const ModelWord& w, const ModelPoint& z);

// The action of a word on the components: a Möbius map and a target per component.
struct ComponentAction {
  std::vector<MobiusMap> maps;  // index j-1
  std::vector<int> targets;     // 1-based

  bool is_identity(double tol = 1e-9) const;
};

ComponentAction action_of(const ModelTilingSet& m, const ModelWord& w);
ComponentAction compose(const ComponentAction& f, const ComponentAction& g);

// Smallest k <= max_order with f^k = id, or 0 when there is none.
int mobius_order(const MobiusMap& f, int max_order);

struct BranchReport {
  std::vector<ModelWord> branches;  // τ^k η, k = 1..np-1
  double generating_residual = 0.0; // sup |τ(z) - (τ²η)(τη)⁻¹(z)| over samples
  double involution_residual = 0.0; // sup |η²(z) - z| over samples
  int samples = 0;
};

BranchReport branch_words(const ModelTilingSet& m, int samples = 100, unsigned seed = 1);

struct RecoveredGenerator {
  int side = 0;  // j, or 0 for the rotation word
  ModelWord word;
  int order = 0;  // 0 when infinite
  bool stabilizes_first = false;
  double residual = 0.0;  // distance of the component-1 map from the preset generator
};

struct Representation {
  std::vector<RecoveredGenerator> generators;
  std::vector<int> recovered_orders;  // finite orders, sorted
  std::vector<int> signature_orders;  // cone orders of the extended signature, sorted
};

Representation recover_representation(const ModelTilingSet& m);

struct TilingTile {
  MobiusMap element;
  std::string word;
  int length = 0;
};

struct TilingReport {
  std::vector<TilingTile> tiles;
  int samples_per_tile = 0;
  long long checks = 0;
  int overlaps = 0;
};

inline constexpr int kMaxWordLength = 8;

// Fundamental domain of the extended group: the polygon cut down to the first sector.
bool in_fundamental_domain(const GroupPreset& g, cplx z, double margin = 1e-9);
std::vector<cplx> fundamental_samples(const GroupPreset& g);

TilingReport group_tiling(const GroupPreset& g, int max_word_length);

class BlaschkeProduct {
 public:
  BlaschkeProduct(std::vector<cplx> zeros, cplx rotation = 1.0);

  static BlaschkeProduct power(int d);  // z^d

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx rotation() const { return rotation_; }
  cplx attracting_point() const { return attracting_; }
  double multiplier() const { return multiplier_; }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  int circle_winding(int samples = 64) const;

 private:
  std::vector<cplx> zeros_;
  cplx rotation_;
  cplx attracting_{0.0};
  double multiplier_ = 0.0;
};

struct BlaschkeOrbit {
  std::vector<cplx> points;
  bool converged = false;
  int steps = 0;
};

BlaschkeOrbit blaschke_orbit(const BlaschkeProduct& b, cplx z, int iterations, double tol = 1e-12);

}  // namespace weldlab
