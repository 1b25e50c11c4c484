#include "weldlab/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

constexpr double kPairingTol = 1e-8;
constexpr double kParabolicTol = 1e-7;
constexpr double kOrderTwoTol = 1e-9;

int wrap(int k, int m) { return ((k % m) + m) % m; }

}  // namespace

std::string to_string(PairingCase c) { return c == PairingCase::CaseI ? "I" : "II"; }

PairingCase parse_case(const std::string& text) {
  if (text == "I" || text == "1" || text == "CaseI") return PairingCase::CaseI;
  if (text == "II" || text == "2" || text == "CaseII") return PairingCase::CaseII;
  throw Error(ErrorCode::InvalidCase, "unknown pairing case '" + text + "'");
}

int OrbifoldSignature::count_order(int m) const {
  return static_cast<int>(std::count(cone_points.begin(), cone_points.end(), m));
}

double OrbifoldSignature::euler_characteristic() const {
  double chi = 2.0 - 2.0 * genus - punctures;
  for (int m : cone_points) chi -= 1.0 - 1.0 / m;
  return chi;
}

MobiusMap GroupPreset::generator(int r, int s) const {
  return conjugate_by_power(first_sector_.at(s - 1), rotation_, r - 1);
}

MobiusMap GroupPreset::side_generator(int k) const { return generator(k / p_ + 1, k % p_ + 1); }

int GroupPreset::paired_side(int k) const { return (k / p_) * p_ + sigma(k % p_ + 1) - 1; }

std::string GroupPreset::label() const {
  return std::string(case_ == PairingCase::CaseII ? "Gamma2" : "Gamma") + "_{" +
         std::to_string(n_) + "," + std::to_string(p_) + "}";
}

GroupPreset build_group(int n, int p, PairingCase c) {
  if (n < 1 || p < 1 || n * p < 2) {
    throw Error(ErrorCode::DegenerateInput,
                "need n, p >= 1 and np >= 2 (got n=" + std::to_string(n) +
                    ", p=" + std::to_string(p) + ")");
  }
  if (c == PairingCase::CaseII && p % 2 != 0) {
    throw Error(ErrorCode::InvalidCase, "Case II needs even p (got p=" + std::to_string(p) + ")");
  }
  if (c == PairingCase::CaseII && n == 1 && p == 2) {
    throw Error(ErrorCode::DegenerateInput, "Case II with n=1, p=2 has coincident sides");
  }

  GroupPreset g(n, p, c, regular_ideal_polygon(n, p));
  g.rotation_ = MobiusMap::rotation(kTwoPi / n);
  const double u = kTwoPi / (n * p);
  const auto& sides = g.polygon_.sides();

  if (c == PairingCase::CaseI) {
    const Geodesic axis(std::numbers::pi / n, std::numbers::pi / n + std::numbers::pi);
    g.axis_ = axis;
    const AntiMobiusMap mirror = reflect(axis);
    for (int s = 1; s <= p; ++s) {
      g.first_sector_.push_back(compose(mirror, reflect(sides[s - 1])));
      g.sigma_.push_back(p + 1 - s);
    }
  } else {
    // Side 1 is folded by a half-turn; the remaining sides are mirrored across
    // the diameter at angle (p+1)u/2, which pairs s with p+2-s.
    const AntiMobiusMap half_turn_mirror = reflect(Geodesic(u / 2.0, u / 2.0 + std::numbers::pi));
    const double phi = (p + 1) * u / 2.0;
    const AntiMobiusMap mirror = reflect(Geodesic(phi, phi + std::numbers::pi));
    g.first_sector_.push_back(compose(half_turn_mirror, reflect(sides[0])));
    g.sigma_.push_back(1);
    for (int s = 2; s <= p; ++s) {
      g.first_sector_.push_back(compose(mirror, reflect(sides[s - 1])));
      g.sigma_.push_back(p + 2 - s);
    }
    const int opposite = (p + 2) / 2;
    try {
      g.axis_ = common_perpendicular(sides[0], sides[opposite - 1]);
    } catch (const Error&) {
      g.axis_.reset();
    }
  }
  return g;
}

std::vector<GroupPreset> preset_grid(int max_n, int max_p) {
  std::vector<GroupPreset> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int p = 1; p <= max_p; ++p) {
      if (n * p < 2) continue;
      out.push_back(build_group(n, p, PairingCase::CaseI));
      if (p % 2 == 0 && !(n == 1 && p == 2)) out.push_back(build_group(n, p, PairingCase::CaseII));
    }
  }
  return out;
}

PairingReport side_pairing_check(const GroupPreset& g) {
  PairingReport report;
  const auto& sides = g.polygon().sides();
  for (int k = 0; k < g.side_count(); ++k) {
    const MobiusMap m = g.side_generator(k);
    const Geodesic& target = sides[g.paired_side(k)];
    const double r1 = std::abs(m(sides[k].endpoint1()) - target.endpoint2());
    const double r2 = std::abs(m(sides[k].endpoint2()) - target.endpoint1());
    const double residual = std::max(r1, r2);
    report.residuals.push_back(residual);
    report.max_residual = std::max(report.max_residual, residual);
  }
  if (report.max_residual > kPairingTol) {
    throw Error(ErrorCode::PairingViolation,
                g.label() + " pairing residual " + std::to_string(report.max_residual));
  }
  return report;
}

CycleReport poincare_check(const GroupPreset& g) {
  CycleReport report;
  const int count = g.side_count();
  std::vector<bool> seen(count, false);
  for (int v0 = 0; v0 < count; ++v0) {
    if (seen[v0]) continue;
    VertexCycle cycle;
    int v = v0;
    int k = v0;  // side starting at v0
    do {
      seen[v] = true;
      cycle.vertices.push_back(v);
      cycle.sides.push_back(k);
      cycle.transformation = compose(g.side_generator(k), cycle.transformation);
      const int k2 = g.paired_side(k);
      // start of k lands on the end of k2 and vice versa
      v = (v == k) ? wrap(k2 + 1, count) : k2;
      k = (v == wrap(k2 + 1, count)) ? wrap(k2 + 1, count) : wrap(k2 - 1, count);
      if (cycle.vertices.size() > static_cast<std::size_t>(2 * count)) {
        throw Error(ErrorCode::NonParabolicCycle, g.label() + " vertex cycle does not close");
      }
    } while (!(v == v0 && k == v0));

    const MobiusMap& m = cycle.transformation;
    const cplx t = m.trace();
    cycle.trace_residual = std::abs(t * t - 4.0);
    cycle.identity = m.is_identity(1e-9);
    if (std::abs(m(unit(g.polygon().vertices()[v0])) - unit(g.polygon().vertices()[v0])) > 1e-7 ||
        (!cycle.identity && cycle.trace_residual >= kParabolicTol)) {
      throw Error(ErrorCode::NonParabolicCycle,
                  g.label() + " cycle at vertex " + std::to_string(v0) + " has |tr^2-4| = " +
                      std::to_string(cycle.trace_residual));
    }
    report.max_trace_residual = std::max(report.max_trace_residual, cycle.trace_residual);
    report.cycles.push_back(std::move(cycle));
  }

  for (int s = 1; s <= g.p(); ++s) {
    if (!g.self_paired(s)) continue;
    const double tr = std::abs(g.generator(1, s).trace());
    report.order_two_traces.emplace_back(s, tr);
    if (tr >= kOrderTwoTol) {
      throw Error(ErrorCode::NonParabolicCycle,
                  g.label() + " self-paired generator " + std::to_string(s) + " has trace " +
                      std::to_string(tr));
    }
  }

  int order = 1;
  MobiusMap acc = g.rotation();
  while (!acc.is_identity(1e-9) && order <= g.n()) {
    acc = compose(acc, g.rotation());
    ++order;
  }
  report.rotation_order = order;
  if (order != g.n()) {
    throw Error(ErrorCode::NonParabolicCycle, g.label() + " rotation has wrong order");
  }
  return report;
}

OrbifoldSignature orbifold_signature(const GroupPreset& g, bool extended) {
  OrbifoldSignature sig;
  const int n = g.n();
  const int p = g.p();
  if (extended || n == 1) {
    if (g.pairing_case() == PairingCase::CaseI) {
      sig.punctures = p / 2 + 1;
      if (p % 2 == 1) sig.cone_points.push_back(2);
    } else {
      sig.punctures = p / 2;
      sig.cone_points.push_back(2);
      sig.cone_points.push_back(2);
    }
    if (n >= 2) sig.cone_points.push_back(n);
  } else {
    // Combinatorial quotient of Π under the full side pairing.
    const int count = g.side_count();
    const CycleReport cycles = poincare_check(g);
    int folded = 0;
    for (int k = 0; k < count; ++k) {
      if (g.paired_side(k) == k) ++folded;
    }
    sig.punctures = static_cast<int>(cycles.cycles.size());
    sig.cone_points.assign(folded, 2);
    const int vertices = sig.punctures + folded;
    const int edges = (count + folded) / 2;
    const int chi = vertices - edges + 1;
    sig.genus = (2 - chi) / 2;
  }
  std::sort(sig.cone_points.begin(), sig.cone_points.end());
  int twos = 0;
  int large = 0;
  for (int m : sig.cone_points) {
    if (m == 2) ++twos;
    if (m >= 3) ++large;
  }
  sig.in_class_f = sig.genus == 0 && twos <= 2 && large <= 1;
  return sig;
}

DegreePlan degree_plan(const std::vector<int>& multiplicities) {
  if (multiplicities.empty()) {
    throw Error(ErrorCode::PreconditionViolation, "degree plan needs at least one multiplicity");
  }
  for (int m : multiplicities) {
    if (m < 1) throw Error(ErrorCode::PreconditionViolation, "multiplicities must be positive");
  }
  DegreePlan plan;
  plan.multiplicities = multiplicities;
  plan.top_multiplicity = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  plan.degree = plan.top_multiplicity + 1;
  const int d = plan.degree;
  const int total = plan.top_multiplicity * 2;
  const bool ok = total == 2 * d - 2 &&
                  static_cast<int>(multiplicities.size()) + 1 <= d &&
                  std::all_of(multiplicities.begin(), multiplicities.end(),
                              [d](int m) { return m <= d - 1; }) &&
                  plan.top_multiplicity <= d - 1;
  if (!ok) throw Error(ErrorCode::InconsistentDegree, "degree plan violates the feasibility test");
  return plan;
}

}  // namespace weldlab
