#include <cmath>

#include "doctest.h"
#include "wbfv/boundary.hpp"
#include "wbfv/equilibrium.hpp"
#include "wbfv/grid.hpp"
#include "wbfv/systems/heat.hpp"

using namespace wbfv;

TEST_CASE("build_grid spacings and geometry") {
  CHECK(build_grid(0, 1, 100).dx == doctest::Approx(0.01));
  CHECK(build_grid(0, 10, 20).dx == doctest::Approx(0.5));
  CHECK(build_grid(0, 10, 200).dx == doctest::Approx(0.05));

  const Grid g = build_grid(0, 10, 20);
  CHECK(g.center(1) == doctest::Approx(0.25));
  CHECK(g.center(20) == doctest::Approx(9.75));
  CHECK(g.interface(0) == doctest::Approx(0.0));
  CHECK(g.interface(20) == doctest::Approx(10.0));

  CHECK_THROWS_AS(build_grid(1, 0, 10), ConfigError);
  CHECK_THROWS_AS(build_grid(0, 1, 1), ConfigError);
}

TEST_CASE("cfl_dt") {
  CHECK(cfl_dt(build_grid(0, 1, 100), 1.0, 0.8) == doctest::Approx(0.008));
  const double lam = std::sqrt(1.0 / 0.05);  // heat with k = 1, r = 1, eps = 0.05
  CHECK(cfl_dt(build_grid(0, 10, 20), lam, 0.8) ==
        doctest::Approx(0.08944).epsilon(1e-4));
  CHECK_THROWS_AS(cfl_dt(build_grid(0, 1, 10), 1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(cfl_dt(build_grid(0, 1, 10), 0.0, 0.8), ConfigError);
}

namespace {

FieldState uniform_state(const Grid& g, const Vec& v) {
  FieldState s(g, v.size());
  for (int i = 0; i <= g.n_cells + 1; ++i) s.set(i, v);
  return s;
}

}  // namespace

TEST_CASE("Dirichlet and extrapolation ghost rules") {
  const Grid g = build_grid(0, 10, 20);
  const auto sys = heat_model();
  const MediumField med = sample_heat_medium(
      g, [](double) { return 1.0; }, 1.0, 0.05, [](double) { return 0.0; });

  BoundarySpec bc;
  bc.left = {{BcKind::kExtrapolate, 0.0}, {BcKind::kDirichlet, -1.0}};
  bc.right = {{BcKind::kDirichlet, -2.5}, {BcKind::kExtrapolate, 0.0}};

  FieldState s = uniform_state(g, Vec{0.0, -1.0});
  s.set(20, Vec{-2.4, -1.0});
  apply_boundaries(s, bc, *sys, med);

  // already-satisfied Dirichlet value is a fixed point
  CHECK(s.get(0)[1] == doctest::Approx(-1.0));
  // extrapolated component copies the interior neighbour
  CHECK(s.get(0)[0] == doctest::Approx(0.0));
  // reflection about the interface target: 2*(-2.5) - (-2.4) = -2.6
  CHECK(s.get(21)[0] == doctest::Approx(-2.6).epsilon(1e-14));

  // idempotence
  const Vec left = s.get(0), right = s.get(21);
  apply_boundaries(s, bc, *sys, med);
  CHECK(s.get(0)[0] == left[0]);
  CHECK(s.get(0)[1] == left[1]);
  CHECK(s.get(21)[0] == right[0]);
  CHECK(s.get(21)[1] == right[1]);
}

TEST_CASE("equilibrium ghost rule continues the seeded discrete equilibrium") {
  const CaseSpec& spec = find_case("heat-steady-source");
  const SeededEquilibrium seed = seed_case_equilibrium(spec, 0.5);
  FieldState s = seed.state;
  // wipe the ghosts, then ask the boundary fill to rebuild them
  s.set(0, Vec(2));
  s.set(s.grid().n_cells + 1, Vec(2));
  apply_boundaries(s, seed.boundaries, *seed.problem.system, seed.problem.medium);
  for (int m = 0; m < 2; ++m) {
    CHECK(s.get(0)[m] ==
          doctest::Approx(seed.state.get(0)[m]).epsilon(1e-12));
    const int gh = s.grid().n_cells + 1;
    CHECK(s.get(gh)[m] ==
          doctest::Approx(seed.state.get(gh)[m]).epsilon(1e-12));
  }
}
