#include "weldlab/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

constexpr double kEndpointSeparation = 1e-12;

double read_tolerance() {
  const char* env = std::getenv("WELDLAB_TOL");
  if (env == nullptr) return 1e-9;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || !(value >= 1e-14 && value <= 1e-3)) return 1e-9;
  return value;
}

bool positive_half(cplx z) {
  return z.real() > 0.0 || (z.real() == 0.0 && z.imag() > 0.0);
}

}  // namespace

double& tolerance_slot() {
  static double tol = read_tolerance();
  return tol;
}

double default_tolerance() { return tolerance_slot(); }

void set_default_tolerance(double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-3)) {
    throw Error(ErrorCode::PreconditionViolation, "tolerance " + std::to_string(tol) + " outside [1e-14, 1e-3]");
  }
  tolerance_slot() = tol;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double ccw_distance(double from, double to) { return normalize_angle(to - from); }

// --- MobiusMap -------------------------------------------------------------

MobiusMap MobiusMap::from_entries(cplx a, cplx b, cplx c, cplx d) {
  const cplx det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale == 0.0 || std::abs(det) <= 1e-300 || std::abs(det) < 1e-24 * scale * scale) {
    throw Error(ErrorCode::DegenerateInput, "singular Mobius matrix");
  }
  const cplx s = std::sqrt(det);
  a /= s;
  b /= s;
  c /= s;
  d /= s;
  const double cutoff = 1e-12 * std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  for (cplx lead : {a, b, c, d}) {
    if (std::abs(lead) > cutoff) {
      if (!positive_half(lead)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
      }
      break;
    }
  }
  return MobiusMap(a, b, c, d);
}

MobiusMap MobiusMap::rotation(double angle) {
  return from_entries(std::polar(1.0, angle / 2.0), 0.0, 0.0, std::polar(1.0, -angle / 2.0));
}

cplx MobiusMap::operator()(cplx z) const {
  const cplx den = c_ * z + d_;
  if (std::abs(den) < 1e-300) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return (a_ * z + b_) / den;
}

MobiusMap MobiusMap::inverse() const { return from_entries(d_, -b_, -c_, a_); }

double MobiusMap::determinant_residual() const { return std::abs(a_ * d_ - b_ * c_ - 1.0); }

bool MobiusMap::preserves_disk(double tol) const {
  // SU(1,1) up to a unimodular u: d = u conj(a), c = u conj(b).
  const cplx u = std::abs(a_) >= std::abs(b_) ? d_ / std::conj(a_) : c_ / std::conj(b_);
  if (std::abs(std::abs(u) - 1.0) > tol) return false;
  return std::abs(d_ - u * std::conj(a_)) <= tol && std::abs(c_ - u * std::conj(b_)) <= tol;
}

bool MobiusMap::approx_equal(const MobiusMap& o, double tol) const {
  const double plus = std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_),
                                std::abs(d_ - o.d_)});
  const double minus = std::max({std::abs(a_ + o.a_), std::abs(b_ + o.b_), std::abs(c_ + o.c_),
                                 std::abs(d_ + o.d_)});
  return std::min(plus, minus) <= tol;
}

MobiusMap MobiusMap::conjugate_entries() const {
  return from_entries(std::conj(a_), std::conj(b_), std::conj(c_), std::conj(d_));
}

std::vector<cplx> MobiusMap::fixed_points() const {
  // c z^2 + (d - a) z - b = 0
  const cplx qa = c_;
  const cplx qb = d_ - a_;
  const cplx qc = -b_;
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
  if (scale < 1e-14) return {};
  if (std::abs(qa) < 1e-14 * scale) {
    if (std::abs(qb) < 1e-14 * scale) return {};
    return {-qc / qb};
  }
  const cplx disc2 = qb * qb - 4.0 * qa * qc;
  if (std::abs(disc2) < 1e-12 * std::max(std::norm(qb), std::abs(qa * qc))) {
    return {-qb / (2.0 * qa)};  // parabolic: double root
  }
  const cplx disc = std::sqrt(disc2);
  const cplx q = -0.5 * (qb + (std::real(std::conj(qb) * disc) >= 0.0 ? disc : -disc));
  std::vector<cplx> roots;
  if (std::abs(q) > 1e-300) {
    roots.push_back(q / qa);
    roots.push_back(qc / q);
  } else {
    roots.push_back(cplx{0.0});
  }
  return roots;
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap::from_entries(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                                 f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

AntiMobiusMap compose(const MobiusMap& f, const AntiMobiusMap& g) { return {compose(f, g.m)}; }

AntiMobiusMap compose(const AntiMobiusMap& f, const MobiusMap& g) {
  return {compose(f.m, g.conjugate_entries())};
}

MobiusMap compose(const AntiMobiusMap& f, const AntiMobiusMap& g) {
  return compose(f.m, g.m.conjugate_entries());
}

MobiusMap power(const MobiusMap& f, int k) {
  MobiusMap base = k < 0 ? f.inverse() : f;
  MobiusMap out;
  for (int i = 0; i < std::abs(k); ++i) out = compose(out, base);
  return out;
}

MobiusMap conjugate_by_power(const MobiusMap& g, const MobiusMap& f, int k) {
  if (k == 0) return g;
  return compose(power(f, k), compose(g, power(f, -k)));
}

// --- Geodesic --------------------------------------------------------------

Geodesic::Geodesic(double theta1, double theta2)
    : theta1_(normalize_angle(theta1)), theta2_(normalize_angle(theta2)) {
  const double sep = ccw_distance(theta1_, theta2_);
  if (sep < kEndpointSeparation || sep > kTwoPi - kEndpointSeparation) {
    throw Error(ErrorCode::CoincidentEndpoints,
                "geodesic endpoints " + std::to_string(theta1) + " and " + std::to_string(theta2));
  }
  if (std::abs(sep - std::numbers::pi) < kEndpointSeparation) {
    diameter_ = true;
    return;
  }
  const double half = std::min(sep, kTwoPi - sep) / 2.0;
  const double mid = sep < std::numbers::pi ? theta1_ + half : theta2_ + half;
  center_ = std::polar(1.0 / std::cos(half), mid);
  radius_ = std::tan(half);
}

double Geodesic::orthogonality_residual() const {
  if (diameter_) return 0.0;
  return std::abs(std::norm(center_) - radius_ * radius_ - 1.0);
}

double Geodesic::side_value(cplx z) const {
  if (diameter_) return -(z * std::polar(1.0, -theta1_)).imag();
  const double d = std::abs(z - center_) - radius_;
  return ccw_distance(theta1_, theta2_) < std::numbers::pi ? d : -d;
}

cplx Geodesic::sample(double t) const {
  if (diameter_) return std::polar(2.0 * t - 1.0, theta2_);
  const double phi1 = std::arg(endpoint1() - center_);
  double delta = std::arg(endpoint2() - center_) - phi1;
  while (delta > std::numbers::pi) delta -= kTwoPi;
  while (delta < -std::numbers::pi) delta += kTwoPi;
  return center_ + std::polar(radius_, phi1 + t * delta);
}

bool Geodesic::same_as(const Geodesic& other, double tol) const {
  auto close = [tol](double x, double y) {
    const double d = ccw_distance(x, y);
    return std::min(d, kTwoPi - d) <= tol;
  };
  return (close(theta1_, other.theta1_) && close(theta2_, other.theta2_)) ||
         (close(theta1_, other.theta2_) && close(theta2_, other.theta1_));
}

Geodesic geodesic_between(double theta1, double theta2) { return Geodesic(theta1, theta2); }

Geodesic geodesic_through(cplx z1, cplx z2) {
  const cplx w = (z2 - z1) / (1.0 - std::conj(z1) * z2);
  if (std::abs(w) < 1e-15) {
    throw Error(ErrorCode::CoincidentEndpoints, "geodesic through coincident points");
  }
  const cplx u = w / std::abs(w);
  auto back = [z1](cplx z) { return (z + z1) / (1.0 + std::conj(z1) * z); };
  return Geodesic(std::arg(back(-u)), std::arg(back(u)));
}

AntiMobiusMap reflect(const Geodesic& g) {
  if (g.is_diameter()) {
    return {MobiusMap::from_entries(std::polar(1.0, g.theta1()), 0.0, 0.0,
                                    std::polar(1.0, -g.theta1()))};
  }
  const cplx c = g.center();
  // z ↦ c + r² / (conj z - conj c), using |c|² - r² = 1
  return {MobiusMap::from_entries(c, -1.0, 1.0, -std::conj(c))};
}

double orthogonality_between(const Geodesic& g1, const Geodesic& g2) {
  if (g1.is_diameter() && g2.is_diameter()) {
    return std::abs(std::cos(g1.theta1() - g2.theta1()));
  }
  if (g1.is_diameter() || g2.is_diameter()) {
    const Geodesic& line = g1.is_diameter() ? g1 : g2;
    const Geodesic& circle = g1.is_diameter() ? g2 : g1;
    const double dist = std::abs((circle.center() * std::polar(1.0, -line.theta1())).imag());
    return dist / circle.radius();
  }
  const double r1 = g1.radius();
  const double r2 = g2.radius();
  return std::abs(std::norm(g1.center() - g2.center()) - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  // g2's endpoints must lie strictly inside one complementary arc of g1.
  const double span = ccw_distance(g1.theta1(), g1.theta2());
  const double tol = 1e-12;
  auto inside_first = [&](double t) {
    const double d = ccw_distance(g1.theta1(), t);
    return d > tol && d < span - tol;
  };
  auto inside_second = [&](double t) {
    const double d = ccw_distance(g1.theta1(), t);
    return d > span + tol && d < kTwoPi - tol;
  };
  const bool same_first = inside_first(g2.theta1()) && inside_first(g2.theta2());
  const bool same_second = inside_second(g2.theta1()) && inside_second(g2.theta2());
  if (!same_first && !same_second) {
    throw Error(ErrorCode::NotDisjoint, "geodesics cross or share an endpoint");
  }
  const MobiusMap hyperbolic = compose(reflect(g2), reflect(g1));
  const auto fixed = hyperbolic.fixed_points();
  if (fixed.size() != 2 || std::abs(fixed[0] - fixed[1]) < 1e-12) {
    throw Error(ErrorCode::NotDisjoint, "no common perpendicular");
  }
  return Geodesic(std::arg(fixed[0]), std::arg(fixed[1]));
}

// --- IdealPolygon ----------------------------------------------------------

IdealPolygon::IdealPolygon(std::vector<double> vertices) : vertices_(std::move(vertices)) {
  const int count = static_cast<int>(vertices_.size());
  if (count < 2) throw Error(ErrorCode::DegenerateInput, "polygon needs at least two vertices");
  double total = 0.0;
  for (int k = 0; k < count; ++k) {
    const double step = ccw_distance(vertices_[k], vertices_[(k + 1) % count]);
    if (step < kEndpointSeparation) {
      throw Error(ErrorCode::DegenerateInput, "polygon vertices not strictly increasing");
    }
    total += step;
  }
  if (std::abs(total - kTwoPi) > 1e-9) {
    throw Error(ErrorCode::DegenerateInput, "polygon vertices wind more than once");
  }
  sides_.reserve(count);
  for (int k = 0; k < count; ++k) sides_.emplace_back(vertices_[k], vertices_[(k + 1) % count]);
}

int IdealPolygon::pocket_of(cplx z, double tol) const {
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < size(); ++k) {
    const double v = sides_[k].side_value(z);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  return best_value <= tol ? best : -1;
}

bool IdealPolygon::contains_interior(cplx z, double margin) const {
  if (std::abs(z) >= 1.0) return false;
  return std::all_of(sides_.begin(), sides_.end(),
                     [&](const Geodesic& g) { return g.side_value(z) > margin; });
}

double IdealPolygon::inner_radius() const {
  double r = 1.0;
  for (const auto& g : sides_) r = std::min(r, g.side_value(0.0));
  return std::max(r, 0.0);
}

IdealPolygon regular_ideal_polygon(int n, int p) {
  if (n < 1 || p < 1 || n * p < 2) {
    throw Error(ErrorCode::DegenerateInput,
                "regular ideal polygon needs np >= 2 (n=" + std::to_string(n) +
                    ", p=" + std::to_string(p) + ")");
  }
  const int count = n * p;
  std::vector<double> vertices(count);
  for (int k = 0; k < count; ++k) vertices[k] = kTwoPi * k / count;
  return IdealPolygon(std::move(vertices));
}

}  // namespace weldlab

namespace weldlab {

std::optional<CircleArc> geodesic_circle(cplx a, cplx b) {
  const double cross = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(cross) < 1e-14) return std::nullopt;
  // the centre c satisfies 2 Re(c̄ z) = 1 + |z|² at both points
  const double ra = 0.5 * (1.0 + std::norm(a));
  const double rb = 0.5 * (1.0 + std::norm(b));
  const cplx c((ra * b.imag() - rb * a.imag()) / cross, (rb * a.real() - ra * b.real()) / cross);
  return CircleArc{c, std::abs(a - c)};
}

}  // namespace weldlab
