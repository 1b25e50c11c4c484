#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weldlab/hyperbolic.hpp"

namespace weldlab {

enum class PairingCase { CaseI, CaseII };

std::string to_string(PairingCase c);
PairingCase parse_case(const std::string& text);

struct OrbifoldSignature {
  int genus = 0;
  int punctures = 0;
  std::vector<int> cone_points;  // sorted ascending
  bool in_class_f = true;

  int count_order(int m) const;
  double euler_characteristic() const;
  bool operator==(const OrbifoldSignature&) const = default;
};

struct DegreePlan {
  std::vector<int> multiplicities;
  int degree = 0;
  int top_multiplicity = 0;
};

class GroupPreset {
 public:
  int n() const { return n_; }
  int p() const { return p_; }
  PairingCase pairing_case() const { return case_; }
  const IdealPolygon& polygon() const { return polygon_; }
  const std::optional<Geodesic>& axis() const { return axis_; }
  const MobiusMap& rotation() const { return rotation_; }
  int side_count() const { return n_ * p_; }

  // 1-based (r, s)
  MobiusMap generator(int r, int s) const;
  int sigma(int s) const { return sigma_[s - 1]; }
  const std::vector<int>& sigma_table() const { return sigma_; }
  bool self_paired(int s) const { return sigma(s) == s; }

  // 0-based side indices k = (r-1)p + (s-1)
  MobiusMap side_generator(int k) const;
  int paired_side(int k) const;

  std::string label() const;

  friend GroupPreset build_group(int n, int p, PairingCase c);

 private:
  GroupPreset(int n, int p, PairingCase c, IdealPolygon polygon)
      : n_(n), p_(p), case_(c), polygon_(std::move(polygon)) {}

  int n_;
  int p_;
  PairingCase case_;
  IdealPolygon polygon_;
  std::optional<Geodesic> axis_;
  std::vector<MobiusMap> first_sector_;
  MobiusMap rotation_;
  std::vector<int> sigma_;
};

GroupPreset build_group(int n, int p, PairingCase c);

// Every (n, p, case) with n <= max_n, p <= max_p that build_group accepts.
std::vector<GroupPreset> preset_grid(int max_n, int max_p);

struct PairingReport {
  std::vector<double> residuals;  // per side index
  double max_residual = 0.0;
};

PairingReport side_pairing_check(const GroupPreset& g);

struct VertexCycle {
  std::vector<int> vertices;
  std::vector<int> sides;  // side taken at each step
  MobiusMap transformation;
  double trace_residual = 0.0;  // |tr² − 4|
  bool identity = false;
};

struct CycleReport {
  std::vector<VertexCycle> cycles;
  std::vector<std::pair<int, double>> order_two_traces;  // (s, |trace|)
  int rotation_order = 1;
  double max_trace_residual = 0.0;
};

CycleReport poincare_check(const GroupPreset& g);

OrbifoldSignature orbifold_signature(const GroupPreset& g, bool extended);

DegreePlan degree_plan(const std::vector<int>& multiplicities);

}  // namespace weldlab
