#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace weldlab {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Geometric tolerance. Defaults to 1e-9; WELDLAB_TOL overrides it.
double default_tolerance();
void set_default_tolerance(double tol);

// Maps an angle into [0, 2π).
double normalize_angle(double theta);

// Counterclockwise angular distance from `from` to `to`, in [0, 2π).
double ccw_distance(double from, double to);

inline cplx unit(double theta) { return std::polar(1.0, theta); }

class MobiusMap {
 public:
  MobiusMap() = default;

  // Normalizes to determinant 1 with the canonical sign.
  static MobiusMap from_entries(cplx a, cplx b, cplx c, cplx d);
  static MobiusMap identity() { return MobiusMap(); }
  static MobiusMap rotation(double angle);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

  cplx operator()(cplx z) const;
  MobiusMap inverse() const;
  cplx trace() const { return a_ + d_; }
  double determinant_residual() const;

  // SU(1,1) form up to a unimodular scalar.
  bool preserves_disk(double tol = 1e-9) const;
  // Equality as maps (matrices up to sign).
  bool approx_equal(const MobiusMap& other, double tol = 1e-9) const;
  bool is_identity(double tol = 1e-9) const { return approx_equal(MobiusMap(), tol); }

  // Entrywise conjugate: the map conj ∘ f ∘ conj.
  MobiusMap conjugate_entries() const;

  // Fixed points in the Riemann sphere restricted to finite ones (1 or 2 values).
  std::vector<cplx> fixed_points() const;

 private:
  MobiusMap(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {}

  cplx a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

// z ↦ m(conj(z))
struct AntiMobiusMap {
  MobiusMap m;

  cplx operator()(cplx z) const { return m(std::conj(z)); }
};

MobiusMap compose(const MobiusMap& f, const MobiusMap& g);
AntiMobiusMap compose(const MobiusMap& f, const AntiMobiusMap& g);
AntiMobiusMap compose(const AntiMobiusMap& f, const MobiusMap& g);
MobiusMap compose(const AntiMobiusMap& f, const AntiMobiusMap& g);

MobiusMap power(const MobiusMap& f, int k);

// f^k g f^-k
MobiusMap conjugate_by_power(const MobiusMap& g, const MobiusMap& f, int k);

class Geodesic {
 public:
  // Oriented geodesic from unit(theta1) to unit(theta2). Its pocket side is the
  // half-plane facing the counterclockwise arc theta1 -> theta2.
  Geodesic(double theta1, double theta2);

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  bool is_diameter() const { return diameter_; }
  // Only meaningful when !is_diameter().
  cplx center() const { return center_; }
  double radius() const { return radius_; }

  cplx endpoint1() const { return unit(theta1_); }
  cplx endpoint2() const { return unit(theta2_); }

  double orthogonality_residual() const;

  // Negative on the pocket side, positive on the polygon side, ~0 on the geodesic.
  double side_value(cplx z) const;
  double distance_to(cplx z) const { return std::abs(side_value(z)); }

  // Point along the geodesic, t in (0,1) from endpoint1 to endpoint2.
  cplx sample(double t) const;

  // Same unoriented geodesic.
  bool same_as(const Geodesic& other, double tol = 1e-9) const;

 private:
  double theta1_;
  double theta2_;
  bool diameter_ = false;
  cplx center_{0.0};
  double radius_ = 0.0;
};

Geodesic geodesic_between(double theta1, double theta2);

// Geodesic through two interior points of the disk.
Geodesic geodesic_through(cplx z1, cplx z2);

AntiMobiusMap reflect(const Geodesic& g);

// Angle between the geodesics at their crossing is π/2 iff this is ~0.
double orthogonality_between(const Geodesic& g1, const Geodesic& g2);

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2);

class IdealPolygon {
 public:
  explicit IdealPolygon(std::vector<double> vertices);

  const std::vector<double>& vertices() const { return vertices_; }
  const std::vector<Geodesic>& sides() const { return sides_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  // Side index whose closed pocket contains z (most interior one), or -1 for the polygon.
  int pocket_of(cplx z, double tol = 1e-12) const;
  bool contains_interior(cplx z, double margin = 0.0) const;
  // Euclidean radius of the largest origin-centred disk inside the polygon.
  double inner_radius() const;

 private:
  std::vector<double> vertices_;
  std::vector<Geodesic> sides_;
};

// Vertices exp(2πik/(np)); side (r,s) is side index (r-1)p + (s-1).
IdealPolygon regular_ideal_polygon(int n, int p);

}  // namespace weldlab

namespace weldlab {

struct CircleArc {
  cplx center;
  double radius = 0.0;
};

// Euclidean circle carrying the geodesic segment between two points of the
// closed disk; empty when the segment is straight (it lies on a diameter).
std::optional<CircleArc> geodesic_circle(cplx a, cplx b);

}  // namespace weldlab
