#include <cmath>
#include <numbers>

#include "doctest.h"
#include "weldlab/error.hpp"
#include "weldlab/fuchsian.hpp"

using namespace weldlab;

namespace {

bool maps_set_onto(const MobiusMap& m, cplx a, cplx b, cplx c, cplx d) {
  const cplx ma = m(a);
  const cplx mb = m(b);
  return (std::abs(ma - c) < 1e-9 && std::abs(mb - d) < 1e-9) ||
         (std::abs(ma - d) < 1e-9 && std::abs(mb - c) < 1e-9);
}

}  // namespace

TEST_CASE("Gamma_{1,4} pairs 1<->4 and 2<->3") {
  const GroupPreset g = build_group(1, 4, PairingCase::CaseI);
  CHECK(g.sigma(1) == 4);
  CHECK(g.sigma(2) == 3);
  const cplx i{0.0, 1.0};
  CHECK(maps_set_onto(g.generator(1, 1), 1.0, i, -i, 1.0));
  for (int s = 1; s <= 4; ++s) {
    CHECK_FALSE(g.self_paired(s));
    CHECK(g.generator(1, 5 - s).approx_equal(g.generator(1, s).inverse()));
    CHECK(g.generator(1, s).preserves_disk());
  }
  CHECK(side_pairing_check(g).max_residual < 1e-8);
  const CycleReport cycles = poincare_check(g);
  CHECK(cycles.cycles.size() == 3);
  CHECK(cycles.order_two_traces.empty());
}

TEST_CASE("Gamma_{3,1} generator is an involution") {
  const GroupPreset g = build_group(3, 1, PairingCase::CaseI);
  const MobiusMap g1 = g.generator(1, 1);
  CHECK(compose(g1, g1).is_identity());
  CHECK(std::abs(g1.trace()) < 1e-9);
  // C_{1,1} goes to itself with its endpoints reversed
  CHECK(std::abs(g1(1.0) - unit(kTwoPi / 3.0)) < 1e-9);
  CHECK(std::abs(g1(unit(kTwoPi / 3.0)) - 1.0) < 1e-9);
  CHECK(power(g.rotation(), 3).is_identity());
  CHECK(poincare_check(g).rotation_order == 3);
}

TEST_CASE("Case II on the square") {
  const GroupPreset g = build_group(1, 4, PairingCase::CaseII);
  CHECK(g.sigma(1) == 1);
  CHECK(g.sigma(3) == 3);
  CHECK(g.sigma(2) == 4);
  CHECK(std::abs(g.generator(1, 1).trace()) < 1e-9);
  CHECK(std::abs(g.generator(1, 3).trace()) < 1e-9);
  CHECK(g.generator(1, 4).approx_equal(g.generator(1, 2).inverse()));
  REQUIRE(g.axis().has_value());
  const auto& sides = g.polygon().sides();
  CHECK(orthogonality_between(*g.axis(), sides[0]) < 1e-8);
  CHECK(orthogonality_between(*g.axis(), sides[2]) < 1e-8);
  CHECK(poincare_check(g).order_two_traces.size() == 2);
}

TEST_CASE("build_group errors") {
  CHECK_THROWS_AS(build_group(1, 3, PairingCase::CaseII), Error);
  CHECK_THROWS_AS(build_group(1, 1, PairingCase::CaseI), Error);
  try {
    build_group(3, 3, PairingCase::CaseII);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCase);
  }
}

TEST_CASE("grid invariants") {
  for (const GroupPreset& g : preset_grid(5, 6)) {
    CAPTURE(g.label());
    const int p = g.p();
    for (int r = 1; r <= g.n(); ++r) {
      for (int s = 1; s <= p; ++s) {
        const MobiusMap expected = compose(power(g.rotation(), r - 1),
                                           compose(g.generator(1, s), power(g.rotation(), -(r - 1))));
        CHECK(g.generator(r, s).approx_equal(expected));
        CHECK(g.generator(r, s).determinant_residual() < 1e-12);
      }
    }
    for (int s = 1; s <= p; ++s) {
      const int partner = g.sigma(s);
      if (g.pairing_case() == PairingCase::CaseI) {
        CHECK(partner == p + 1 - s);
      } else {
        CHECK(partner == ((p + 2 - s - 1) % p) + 1);
      }
      CHECK(g.sigma(partner) == s);
      CHECK(g.generator(1, partner).approx_equal(g.generator(1, s).inverse(), 1e-9));
    }
    CHECK(side_pairing_check(g).max_residual < 1e-8);
    const CycleReport report = poincare_check(g);
    CHECK(report.max_trace_residual < 1e-7);
    CHECK(report.rotation_order == g.n());

    const OrbifoldSignature ext = orbifold_signature(g, true);
    const OrbifoldSignature base = orbifold_signature(g, false);
    CHECK(std::abs(base.euler_characteristic() - g.n() * ext.euler_characteristic()) < 1e-12);
    CHECK(base.euler_characteristic() == doctest::Approx(-(g.n() * p - 2) / 2.0));
    if (!(g.n() == 2 && g.pairing_case() == PairingCase::CaseII)) CHECK(ext.in_class_f);
  }
}

TEST_CASE("orbifold signatures") {
  const OrbifoldSignature square = orbifold_signature(build_group(1, 4, PairingCase::CaseI), true);
  CHECK(square.genus == 0);
  CHECK(square.punctures == 3);
  CHECK(square.cone_points.empty());

  const OrbifoldSignature square2 = orbifold_signature(build_group(1, 4, PairingCase::CaseII), true);
  CHECK(square2.punctures == 2);
  CHECK(square2.cone_points == std::vector<int>{2, 2});

  const OrbifoldSignature modular = orbifold_signature(build_group(3, 1, PairingCase::CaseI), true);
  CHECK(modular.punctures == 1);
  CHECK(modular.cone_points == std::vector<int>{2, 3});

  const OrbifoldSignature odd = orbifold_signature(build_group(1, 3, PairingCase::CaseI), false);
  CHECK(odd.punctures == 2);
  CHECK(odd.cone_points == std::vector<int>{2});
}

TEST_CASE("degree plans") {
  const DegreePlan a = degree_plan({1, 1});
  CHECK(a.degree == 3);
  CHECK(a.top_multiplicity == 2);
  const DegreePlan b = degree_plan({1, 2});
  CHECK(b.degree == 4);
  CHECK(b.top_multiplicity == 3);
  const DegreePlan c = degree_plan({2, 1, 1, 1, 1});
  CHECK(c.degree == 7);
  CHECK(c.top_multiplicity == 6);
  CHECK_THROWS_AS(degree_plan({}), Error);
}
