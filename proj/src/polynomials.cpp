#include <cmath>
#include <numbers>

#include "weldlab/error.hpp"
#include "weldlab/mating_schema.hpp"

namespace weldlab {

namespace {

constexpr double kVanishTol = 1e-8;
constexpr double kNonVanishTol = 1e-4;

cplx septic_residual(cplx a) {
  const cplx ab = std::conj(a);
  return 15.0 * a + 6.0 * std::pow(a, 7) - 14.0 * std::pow(a, 5) * ab * ab;
}

}  // namespace

cplx poly_eval(const std::vector<cplx>& coefficients, cplx z, int derivative) {
  cplx acc = 0.0;
  const int deg = static_cast<int>(coefficients.size()) - 1;
  for (int k = deg; k >= derivative; --k) {
    double factor = 1.0;
    for (int j = 0; j < derivative; ++j) factor *= k - j;
    acc = acc * z + factor * coefficients[k];
  }
  return acc;
}

PolynomialReport verify_polynomial(const PolynomialEntry& entry) {
  for (cplx c : entry.coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::VerificationFailed, entry.name + " has non-finite coefficients");
    }
  }
  PolynomialReport report;
  report.name = entry.name;
  report.degree = entry.degree();
  report.multiplicity_total = report.degree - 1;  // infinity
  for (const CriticalPoint& cp : entry.critical_points) {
    CriticalCheck check;
    check.z = cp.z;
    check.multiplicity = cp.multiplicity;
    check.fixed_residual = std::abs(poly_eval(entry.coefficients, cp.z) - cp.z);
    for (int j = 1; j <= cp.multiplicity; ++j) {
      check.vanishing_residual =
          std::max(check.vanishing_residual, std::abs(poly_eval(entry.coefficients, cp.z, j)));
    }
    check.next_derivative = std::abs(poly_eval(entry.coefficients, cp.z, cp.multiplicity + 1));
    report.multiplicity_total += cp.multiplicity;
    if (check.fixed_residual >= kVanishTol || check.vanishing_residual >= kVanishTol ||
        check.next_derivative < kNonVanishTol) {
      throw Error(ErrorCode::VerificationFailed,
                  entry.name + ": critical point (" + std::to_string(cp.z.real()) + ", " +
                      std::to_string(cp.z.imag()) + ") fails its checks");
    }
    report.critical.push_back(check);
  }
  for (cplx f : entry.fixed_points) {
    report.fixed_point_residual =
        std::max(report.fixed_point_residual, std::abs(poly_eval(entry.coefficients, f) - f));
  }
  if (report.fixed_point_residual >= kVanishTol) {
    throw Error(ErrorCode::VerificationFailed, entry.name + ": declared fixed point is not fixed");
  }
  if (report.multiplicity_total != 2 * report.degree - 2) {
    throw Error(ErrorCode::VerificationFailed,
                entry.name + ": critical multiplicities sum to " +
                    std::to_string(report.multiplicity_total) + ", expected " +
                    std::to_string(2 * report.degree - 2));
  }
  return report;
}

AlphaSolution solve_septic_alpha() {
  AlphaSolution sol;
  cplx a{1.0, 0.25};
  for (int it = 0; it < 60; ++it) {
    const cplx f = septic_residual(a);
    sol.iterations = it;
    if (std::abs(f) < 1e-14) break;
    const cplx ab = std::conj(a);
    const cplx fa = 15.0 + 42.0 * std::pow(a, 6) - 70.0 * std::pow(a, 4) * ab * ab;
    const cplx fb = -28.0 * std::pow(a, 5) * ab;
    // fa·δ + fb·conj(δ) = −f
    const double det = std::norm(fa) - std::norm(fb);
    if (std::abs(det) < 1e-300) break;
    const cplx delta = (-f * std::conj(fa) + fb * std::conj(f)) / det;
    a += delta;
    if (std::abs(delta) < 1e-16) break;
  }
  sol.alpha = a;
  sol.residual = std::abs(septic_residual(a));
  if (!(a.real() > 0.0 && a.imag() > 0.0) || sol.residual >= 1e-10) {
    throw Error(ErrorCode::VerificationFailed, "Newton iteration for alpha did not converge");
  }
  return sol;
}

std::vector<PolynomialEntry> polynomial_registry() {
  std::vector<PolynomialEntry> out;

  const cplx i{0.0, 1.0};
  PolynomialEntry cubic;
  cubic.name = "cubic";
  cubic.coefficients = {0.0, 1.5, 0.0, 1.0};
  cubic.critical_points = {{i / std::sqrt(2.0), 1}, {-i / std::sqrt(2.0), 1}};
  cubic.fixed_points = {0.0, i / std::sqrt(2.0), -i / std::sqrt(2.0)};
  out.push_back(cubic);

  PolynomialEntry quartic;
  quartic.name = "quartic";
  quartic.coefficients = {0.0, 0.0, 0.0, 4.0 / std::cbrt(9.0), 1.0};
  quartic.critical_points = {{-std::cbrt(3.0), 1}, {0.0, 2}};
  quartic.fixed_points = {0.0, -std::cbrt(3.0)};
  out.push_back(quartic);

  const cplx a = solve_septic_alpha().alpha;
  const cplx ab = std::conj(a);
  PolynomialEntry septic;
  septic.name = "septic";
  const double a4 = std::pow(std::abs(a), 4);
  septic.coefficients = {0.0, 0.0, 0.0, 7.0 / 3.0 * a4, 0.0, -7.0 / 5.0 * (a * a + ab * ab), 0.0, 1.0};
  septic.critical_points = {{0.0, 2}, {a, 1}, {-a, 1}, {ab, 1}, {-ab, 1}};
  septic.fixed_points = {0.0, a, -a, ab, -ab};
  out.push_back(septic);
  return out;
}

PolynomialEntry registry_entry(const std::string& name) {
  for (auto& e : polynomial_registry()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::SchemaError, "unknown polynomial '" + name + "'");
}

}  // namespace weldlab
