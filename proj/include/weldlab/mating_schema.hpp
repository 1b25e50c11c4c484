#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weldlab/fuchsian.hpp"
#include "weldlab/hyperbolic.hpp"

namespace weldlab {

enum class SlotKind { Group, Blaschke };
enum class Placement { Bounded, Unbounded };

struct Slot {
  SlotKind kind = SlotKind::Group;
  int n = 1;
  int p = 1;
  PairingCase pairing = PairingCase::CaseI;
  int degree = 0;  // Blaschke degree
  Placement placement = Placement::Bounded;

  static Slot group(int n, int p, PairingCase c, Placement pl = Placement::Bounded);
  static Slot blaschke(int d, Placement pl = Placement::Bounded);

  // np − 1 for group slots, d for Blaschke slots.
  int circle_degree() const;
  std::string label() const;
};

struct CornerRef {
  int slot = 0;
  int corner = 0;
  auto operator<=>(const CornerRef&) const = default;
};

struct SideRef {
  int slot = 0;
  int side = 1;  // 1-based
  auto operator<=>(const SideRef&) const = default;
};

// Side s runs from corner s−1 to corner s (mod p) with the hole on the left;
// corner k sits between side k and side k+1.
struct HoleBoundary {
  int slot = 0;
  int p = 1;
  PairingCase pairing = PairingCase::CaseI;
  std::vector<int> sigma;         // sigma[s-1], 1-based sides
  std::vector<int> corner_image;  // corner k ↦ corner_image[k]
  std::vector<int> fixed_corners;
  std::vector<int> interior_fixed_sides;

  int side_partner(int s) const { return sigma[s - 1]; }
  bool self_paired(int s) const { return sigma[s - 1] == s; }
};

// Identification classes, each listed in counterclockwise order around the
// shared point. Corners in no class are singletons.
struct ContactData {
  std::vector<std::vector<CornerRef>> classes;
  // Pairs of boundary walks (named by a side they traverse) bounding the same face.
  std::vector<std::pair<SideRef, SideRef>> enclosures;
};

struct MatingSchema {
  std::string name;
  std::vector<Slot> slots;
  ContactData contact;
  std::optional<std::string> polynomial;
};

struct Arc {
  int slot = 0;
  int side = 1;
  int half = -1;  // -1: whole side; 0/1: halves of a self-paired side
};

struct Face {
  std::vector<std::vector<int>> cycles;  // boundary walks as arc sequences
};

struct BoundaryComplex {
  std::vector<Slot> slots;
  std::vector<HoleBoundary> holes;
  std::vector<int> hole_of_slot;  // -1 for Blaschke slots

  std::vector<Arc> arcs;
  std::vector<int> s_action;  // arc involution
  std::vector<int> next_arc;  // successor along the boundary walk
  std::vector<int> prev_arc;
  std::vector<int> arc_face;
  std::vector<Face> faces;

  // Vertices: corner classes first, then one inserted vertex per self-paired side.
  int vertex_count = 0;
  std::vector<int> arc_start;
  std::vector<int> arc_end;
  std::vector<int> vertex_s_action;
  std::vector<bool> vertex_inserted;
  std::vector<std::vector<CornerRef>> vertex_corners;

  int clusters = 0;
  int walks = 0;

  int face_count() const { return static_cast<int>(faces.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }
  const HoleBoundary& hole(int slot) const { return holes[hole_of_slot[slot]]; }
  std::string arc_label(int a) const;
};

HoleBoundary build_hole(const Slot& slot, int slot_index = 0);

void validate_contact(const std::vector<Slot>& slots, const ContactData& contact);

BoundaryComplex assemble(const std::vector<Slot>& slots, const ContactData& contact);

struct DegreeReport {
  int polynomial_degree = 0;
  int correspondence_degree = 0;  // deg P + 1, meaningful only for connected surfaces
  std::optional<int> unbounded_slot;
};

DegreeReport validate_degrees(const std::vector<Slot>& slots);

MatingSchema newton_schema(int n);

// --- explicit polynomials ---------------------------------------------------

struct CriticalPoint {
  cplx z;
  int multiplicity = 1;
};

struct PolynomialEntry {
  std::string name;
  std::vector<cplx> coefficients;  // ascending powers
  std::vector<CriticalPoint> critical_points;
  std::vector<cplx> fixed_points;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct CriticalCheck {
  cplx z;
  int multiplicity = 1;
  double fixed_residual = 0.0;
  double vanishing_residual = 0.0;  // max |P^(j)(c)|, j = 1..m
  double next_derivative = 0.0;     // |P^(m+1)(c)|
};

struct PolynomialReport {
  std::string name;
  int degree = 0;
  std::vector<CriticalCheck> critical;
  double fixed_point_residual = 0.0;
  int multiplicity_total = 0;  // including infinity
};

cplx poly_eval(const std::vector<cplx>& coefficients, cplx z, int derivative = 0);

PolynomialReport verify_polynomial(const PolynomialEntry& entry);

struct AlphaSolution {
  cplx alpha;
  double residual = 0.0;
  int iterations = 0;
};

// First-quadrant root of 15α + 6α⁷ − 14α⁵ᾱ², by two-variable Newton iteration.
AlphaSolution solve_septic_alpha();

std::vector<PolynomialEntry> polynomial_registry();
PolynomialEntry registry_entry(const std::string& name);

}  // namespace weldlab
