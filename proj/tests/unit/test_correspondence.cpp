#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "weldlab/correspondence.hpp"
#include "weldlab/error.hpp"

using namespace weldlab;

namespace {

ModelTilingSet model(int n, int p, PairingCase c = PairingCase::CaseI) {
  return ModelTilingSet(build_group(n, p, c));
}

}  // namespace

TEST_CASE("tau relations hold exactly") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (const GroupPreset& g : preset_grid(5, 6)) {
    const ModelTilingSet m(g);
    for (int i = 0; i < 20; ++i) {
      const ModelPoint z = m.make_point({u(rng), u(rng)}, 1 + i % m.p());
      CHECK(m.tau(z, m.degree()) == z);
      CHECK(m.tau(m.tau(z, 3), -3) == z);
      const ModelPoint t = m.tau(z);
      CHECK(m.project(t) == m.project(z));
    }
  }
}

TEST_CASE("fiber examples") {
  const ModelTilingSet m31 = model(3, 1);
  const auto f = m31.fiber(m31.make_point(0.5, 1));
  REQUIRE(f.size() == 3);
  const cplx w = unit(kTwoPi / 3);
  CHECK(std::abs(m31.value(f[1]) - 0.5 * w) < 1e-15);
  CHECK(std::abs(m31.value(f[2]) - 0.5 * w * w) < 1e-15);

  const ModelTilingSet m22 = model(2, 2);
  const auto g = m22.fiber(m22.make_point(0.3, 1));
  REQUIRE(g.size() == 4);
  CHECK(g[1].comp == 2);
  CHECK(std::abs(m22.value(g[2]) + 0.3) < 1e-15);
  CHECK(g[2].comp == 1);
  CHECK(std::abs(m22.value(g[3]) + 0.3) < 1e-15);
  CHECK(g[3].comp == 2);

  for (int p : {1, 2, 3}) {
    const ModelTilingSet m = model(3, p);
    CHECK(m.fiber(m.make_point(0.0, 1)).size() == static_cast<std::size_t>(p));
  }
}

TEST_CASE("fiber equals the set of n-th roots on every component") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> r(0.05, 0.95);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  for (const GroupPreset& g : preset_grid(5, 6)) {
    const ModelTilingSet m(g);
    for (int i = 0; i < 100; ++i) {
      const ModelPoint z = m.make_point(std::polar(r(rng), a(rng)), 1 + i % m.p());
      const cplx c = std::pow(m.value(z), m.n());
      // direct enumeration of the solutions of wⁿ = c
      const double mod = std::pow(std::abs(c), 1.0 / m.n());
      std::vector<std::pair<cplx, int>> roots;
      for (int k = 0; k < m.n(); ++k) {
        for (int j = 1; j <= m.p(); ++j) {
          roots.push_back({std::polar(mod, (std::arg(c) + kTwoPi * k) / m.n()), j});
        }
      }
      const auto fib = m.fiber(z);
      REQUIRE(fib.size() == roots.size());
      for (const auto& pt : fib) {
        const bool found = std::any_of(roots.begin(), roots.end(), [&](const auto& q) {
          return q.second == pt.comp && std::abs(q.first - m.value(pt)) < 1e-12;
        });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("branch words") {
  const BranchReport b31 = branch_words(model(3, 1));
  REQUIRE(b31.branches.size() == 2);
  CHECK(b31.branches[0].text() == "tau eta");
  CHECK(b31.branches[1].text() == "tau^2 eta");
  CHECK(branch_words(model(2, 1)).branches.size() == 1);

  for (const GroupPreset& g : preset_grid(5, 6)) {
    const ModelTilingSet m(g);
    const BranchReport b = branch_words(m);
    CHECK(static_cast<int>(b.branches.size()) == g.side_count() - 1);
    CHECK(b.involution_residual < 1e-9);
    CHECK(b.generating_residual < 1e-9);
  }
}

TEST_CASE("representation recovery") {
  const Representation r31 = recover_representation(model(3, 1));
  CHECK(r31.generators[0].order == 2);
  CHECK(r31.recovered_orders == std::vector<int>{2, 3});

  const Representation r14 = recover_representation(model(1, 4, PairingCase::CaseII));
  CHECK(r14.generators[0].order == 2);
  CHECK(r14.generators[2].order == 2);
  CHECK(r14.generators[1].order == 0);

  const Representation r41 = recover_representation(model(4, 1));
  CHECK(r41.generators.back().order == 4);

  for (const GroupPreset& g : preset_grid(5, 6)) {
    CHECK_NOTHROW(recover_representation(ModelTilingSet(g)));
  }
}

TEST_CASE("tilings are interior-disjoint") {
  CHECK(group_tiling(build_group(3, 1, PairingCase::CaseI), 0).tiles.size() == 1);
  // free group on two generators and their inverses: reduced words of length <= 2
  CHECK(group_tiling(build_group(1, 4, PairingCase::CaseI), 2).tiles.size() == 1 + 4 + 12);
  CHECK(group_tiling(build_group(1, 3, PairingCase::CaseI), 2).tiles.size() == 1 + 3 + 6);

  const std::vector<std::tuple<int, int, PairingCase>> presets{
      {3, 1, PairingCase::CaseI}, {4, 1, PairingCase::CaseI}, {1, 3, PairingCase::CaseI},
      {1, 4, PairingCase::CaseI}, {1, 4, PairingCase::CaseII}};
  for (const auto& [n, p, c] : presets) {
    const TilingReport t = group_tiling(build_group(n, p, c), 4);
    CHECK(t.overlaps == 0);
    CHECK(t.samples_per_tile == 20);
    CHECK(t.tiles.size() > 10);
  }
  CHECK_THROWS_AS(group_tiling(build_group(1, 4, PairingCase::CaseI), 9), Error);
  CHECK_THROWS_AS(group_tiling(build_group(2, 1, PairingCase::CaseI), 2), Error);
}

TEST_CASE("samples lie in exactly one tile") {
  // translates of the domain by a generator never contain the original samples
  const GroupPreset g = build_group(3, 1, PairingCase::CaseI);
  for (cplx x : fundamental_samples(g)) {
    CHECK(in_fundamental_domain(g, x));
    CHECK_FALSE(in_fundamental_domain(g, g.generator(1, 1)(x)));
    CHECK_FALSE(in_fundamental_domain(g, g.rotation()(x)));
  }
}

TEST_CASE("Blaschke products") {
  const BlaschkeProduct sq = BlaschkeProduct::power(2);
  CHECK(std::abs(sq.attracting_point()) < 1e-15);
  const BlaschkeOrbit o = blaschke_orbit(sq, 0.9, 1000);
  CHECK(o.converged);
  CHECK(std::abs(sq(1.0) - 1.0) < 1e-15);

  const BlaschkeProduct b(std::vector<cplx>{0.0, 0.5});
  CHECK(std::abs(b.multiplier() - 0.5) < 1e-12);
  CHECK(std::abs(b(0.3) - 0.3 * (0.3 - 0.5) / (1 - 0.15)) < 1e-15);
  const cplx z(0.2, -0.4);
  const double h = 1e-6;
  CHECK(std::abs(b.derivative(z) - (b(z + h) - b(z - h)) / (2 * h)) < 1e-8);

  for (int d = 2; d <= 6; ++d) CHECK(BlaschkeProduct::power(d).circle_winding() == d);
  CHECK(BlaschkeProduct(std::vector<cplx>{0.1, {0.2, 0.3}, -0.4}).circle_winding() == 3);

  CHECK_THROWS_AS(BlaschkeProduct::power(1), Error);
  const double s = 1.0 / std::sqrt(3.0);
  CHECK_THROWS_AS(BlaschkeProduct(std::vector<cplx>{{0, s}, {0, -s}}), Error);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const BlaschkeProduct h3(std::vector<cplx>{{0.3, 0.1}, {-0.2, 0.4}, {0.1, -0.5}});
  for (int i = 0; i < 200; ++i) CHECK(blaschke_orbit(h3, {u(rng), u(rng)}, 1000, 1e-10).converged);
}
