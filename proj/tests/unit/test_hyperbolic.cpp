#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "weldlab/error.hpp"
#include "weldlab/hyperbolic.hpp"

using namespace weldlab;

namespace {

cplx random_disk_point(std::mt19937& rng, double max_radius = 0.95) {
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return std::polar(radius(rng), angle(rng));
}

MobiusMap random_disk_map(std::mt19937& rng) {
  const cplx a = random_disk_point(rng, 0.8);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const cplx u = std::polar(1.0, angle(rng));
  // u (z - a) / (1 - conj(a) z)
  return MobiusMap::from_entries(u, -u * a, -std::conj(a), 1.0);
}

}  // namespace

TEST_CASE("mobius normalization and composition") {
  std::mt19937 rng(7);
  const MobiusMap f = random_disk_map(rng);
  CHECK(f.determinant_residual() < 1e-12);
  CHECK(f.preserves_disk());
  CHECK(compose(MobiusMap::identity(), f).approx_equal(f));
  CHECK(compose(f, f.inverse()).is_identity());
  CHECK(compose(f.inverse(), f).is_identity());

  for (int i = 0; i < 50; ++i) {
    const MobiusMap a = random_disk_map(rng);
    const MobiusMap b = random_disk_map(rng);
    const MobiusMap c = random_disk_map(rng);
    CHECK(compose(compose(a, b), c).approx_equal(compose(a, compose(b, c)), 1e-10));
    const cplx z = std::polar(1.0, 0.37 * i);
    CHECK(std::abs(std::abs(a(z)) - 1.0) < 1e-10);
  }
}

TEST_CASE("canonical sign makes negated matrices equal") {
  const MobiusMap f = MobiusMap::from_entries({0.0, 2.0}, 1.0, 1.0, {0.0, -1.0});
  const MobiusMap g = MobiusMap::from_entries({0.0, -2.0}, -1.0, -1.0, {0.0, 1.0});
  CHECK(std::abs(f.a() - g.a()) < 1e-15);
  CHECK(std::abs(f.d() - g.d()) < 1e-15);
}

TEST_CASE("rotation squared for n = 3") {
  const MobiusMap m = MobiusMap::rotation(kTwoPi / 3.0);
  const cplx image = compose(m, m)(1.0);
  CHECK(std::abs(image - std::polar(1.0, 4.0 * std::numbers::pi / 3.0)) < 1e-14);
  CHECK(power(m, 3).is_identity());
}

TEST_CASE("reflection across the real diameter is conjugation") {
  const AntiMobiusMap r = reflect(geodesic_between(0.0, std::numbers::pi));
  const cplx z{0.3, -0.4};
  CHECK(std::abs(r(z) - std::conj(z)) < 1e-15);
}

TEST_CASE("reflections are involutions fixing their geodesic") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    const double t1 = angle(rng);
    const double t2 = t1 + 0.2 + 5.8 * (trial / 20.0);
    const Geodesic g(t1, t2);
    CHECK(g.orthogonality_residual() < 1e-9);
    const AntiMobiusMap r = reflect(g);
    CHECK(std::abs(r(g.endpoint1()) - g.endpoint1()) < 1e-9);
    CHECK(std::abs(r(g.endpoint2()) - g.endpoint2()) < 1e-9);
    const MobiusMap rr = compose(r, r);
    for (int i = 0; i < 100; ++i) {
      const cplx z = random_disk_point(rng);
      CHECK(std::abs(rr(z) - z) < 1e-10);
    }
    for (double t : {0.2, 0.5, 0.8}) {
      const cplx w = g.sample(t);
      CHECK(std::abs(g.side_value(w)) < 1e-9);
      CHECK(std::abs(r(w) - w) < 1e-9);
    }
    // swaps sides
    const cplx off = g.sample(0.5) * 0.9;
    CHECK(g.side_value(off) * g.side_value(r(off)) < 0.0);
  }
}

TEST_CASE("geodesic construction") {
  const Geodesic quarter(0.0, std::numbers::pi / 2.0);
  CHECK_FALSE(quarter.is_diameter());
  // circle through 1 and i, orthogonal to the unit circle: center 1+i, radius 1
  CHECK(std::abs(quarter.center() - cplx(1.0, 1.0)) < 1e-12);
  CHECK(std::abs(quarter.radius() - 1.0) < 1e-12);
  CHECK(std::abs(std::norm(quarter.center()) - quarter.radius() * quarter.radius() - 1.0) < 1e-9);
  CHECK(geodesic_between(0.0, std::numbers::pi).is_diameter());
  CHECK_THROWS_AS(geodesic_between(1.0, 1.0), Error);
}

TEST_CASE("pocket side faces the counterclockwise arc") {
  const Geodesic short_arc(0.0, 1.0);
  CHECK(short_arc.side_value(0.99 * unit(0.5)) < 0.0);
  CHECK(short_arc.side_value(0.0) > 0.0);
  const Geodesic long_arc(0.0, 5.0);
  CHECK(long_arc.side_value(0.99 * unit(2.5)) < 0.0);
  CHECK(long_arc.side_value(0.99 * unit(5.6)) > 0.0);
  const Geodesic diameter(0.0, std::numbers::pi);
  CHECK(diameter.side_value({0.0, 0.5}) < 0.0);
}

TEST_CASE("common perpendicular") {
  const double a = std::numbers::pi / 6.0;
  const double b = std::numbers::pi / 3.0;
  const Geodesic upper(a, b);
  const Geodesic lower(-b, -a);
  const Geodesic perp = common_perpendicular(upper, lower);
  // symmetric under conjugation: endpoints are conjugate, and it crosses the real axis at a right angle
  CHECK(std::abs(perp.endpoint1() - std::conj(perp.endpoint2())) < 1e-9);
  CHECK(orthogonality_between(perp, geodesic_between(0.0, std::numbers::pi)) < 1e-9);
  CHECK(orthogonality_between(perp, upper) < 1e-8);
  CHECK(orthogonality_between(perp, lower) < 1e-8);

  const Geodesic first(0.0, 2.0);
  const Geodesic crossing(1.0, 3.0);
  CHECK_THROWS_AS(common_perpendicular(first, crossing), Error);
  CHECK_THROWS_AS(common_perpendicular(first, Geodesic(2.0, 4.0)), Error);
}

TEST_CASE("geodesic through two interior points") {
  const cplx z1{0.2, 0.1};
  const cplx z2{-0.4, 0.5};
  const Geodesic g = geodesic_through(z1, z2);
  CHECK(std::abs(g.side_value(z1)) < 1e-12);
  CHECK(std::abs(g.side_value(z2)) < 1e-12);
}

TEST_CASE("regular ideal polygons") {
  const IdealPolygon tri = regular_ideal_polygon(3, 1);
  REQUIRE(tri.size() == 3);
  CHECK(std::abs(tri.sides()[0].theta2() - kTwoPi / 3.0) < 1e-15);
  CHECK(tri.sides()[0].theta1() == 0.0);
  const IdealPolygon square = regular_ideal_polygon(1, 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(unit(square.vertices()[k]) - std::pow(cplx(0.0, 1.0), k)) < 1e-15);
  }
  CHECK(square.pocket_of(0.0) == -1);
  CHECK(square.pocket_of(0.99 * unit(0.3)) == 0);
  CHECK(square.pocket_of(0.99 * unit(4.0)) == 2);
  CHECK(square.inner_radius() > 0.4);
  CHECK_THROWS_AS(regular_ideal_polygon(1, 1), Error);
  CHECK_NOTHROW(regular_ideal_polygon(1, 2));
}
