#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "wbfv/equilibrium.hpp"
#include "wbfv/fluctuation_solver.hpp"
#include "wbfv/unbalanced_solver.hpp"
#include "wbfv/systems/acoustics.hpp"
#include "wbfv/systems/heat.hpp"

using namespace wbfv;

namespace {

MediumCell acoustics_cell(double k, double rho) {
  MediumCell m;
  m.p[AcousticsMedium::kBulkModulus] = k;
  m.p[AcousticsMedium::kDensity] = rho;
  return m;
}

MediumCell heat_cell(double k, double r, double eps, double phi = 0.0) {
  MediumCell m;
  m.p[HeatMedium::kConductivity] = k;
  m.p[HeatMedium::kInvCapacity] = r;
  m.p[HeatMedium::kRelaxation] = eps;
  m.p[HeatMedium::kSource] = phi;
  return m;
}

}  // namespace

TEST_CASE("interface_average") {
  const auto ac = acoustics_model();
  const Mat a1 = ac->coeff_matrix(acoustics_cell(1.0, 1.0));
  CHECK((interface_average(a1, a1) - a1).inf_norm() == 0.0);

  const Mat a2 = ac->coeff_matrix(acoustics_cell(1.0, 4.0));
  CHECK(interface_average(a1, a2)(1, 0) == doctest::Approx(0.625));

  const auto heat = heat_model();
  const Mat h = interface_average(heat->coeff_matrix(heat_cell(1.0, 1.0, 1.0)),
                                  heat->coeff_matrix(heat_cell(4.0, 1.0, 1.0)));
  CHECK(h(0, 1) == doctest::Approx(1.0));
  CHECK(h(1, 0) == doctest::Approx(2.5));
  const EigenDecomposition d = heat->eigen(h);
  CHECK(d.lambdas[0] == doctest::Approx(-1.58114).epsilon(1e-5));
  CHECK(d.lambdas[1] == doctest::Approx(1.58114).epsilon(1e-5));
}

TEST_CASE("solve_interface homogeneous acoustics oracle") {
  const auto ac = acoustics_model();
  const MediumCell m = acoustics_cell(1.0, 1.0);
  const Mat a = ac->coeff_matrix(m);
  const InterfaceSolve is = solve_interface(Vec{0.0, 0.0}, Vec{1.0, 0.0}, a, a,
                                            Vec(2), Vec(2), 0.1, *ac);
  CHECK(is.alpha[0] == doctest::Approx(-0.5));
  CHECK(is.alpha[1] == doctest::Approx(0.5));
  CHECK(is.d_minus[0] == doctest::Approx(-0.5));
  CHECK(is.d_minus[1] == doctest::Approx(0.5));
  CHECK(is.d_plus[0] == doctest::Approx(0.5));
  CHECK(is.d_plus[1] == doctest::Approx(0.5));
  const Vec sum = is.d_minus + is.d_plus;
  CHECK(sum[0] == doctest::Approx(0.0));
  CHECK(sum[1] == doctest::Approx(1.0));
}

TEST_CASE("solve_interface vanishes on discrete equilibria") {
  const auto heat = heat_model();
  const MediumCell mi = heat_cell(0.7, 1.3, 0.04, 0.3);
  const MediumCell mj = heat_cell(2.1, 1.3, 0.04, -0.1);
  const double dx = 0.25;
  const Vec ui{0.4, -0.9};
  const Vec uj = extend_equilibrium(*heat, ui, mi, mj, dx, true);
  const InterfaceSolve is =
      solve_interface(ui, uj, heat->coeff_matrix(mi), heat->coeff_matrix(mj),
                      heat->source(ui, mi), heat->source(uj, mj), dx, *heat);
  CHECK(is.d_minus.inf_norm() <= 1e-13);
  CHECK(is.d_plus.inf_norm() <= 1e-13);
}

TEST_CASE("fluctuation sum identity on random heat interfaces") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> kd(0.05, 5.0), sd(-3.0, 3.0);
  const auto heat = heat_model();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MediumCell mi = heat_cell(kd(rng), 1.0, 0.05, sd(rng));
    const MediumCell mj = heat_cell(kd(rng), 1.0, 0.05, sd(rng));
    const Vec ui{sd(rng), sd(rng)};
    const Vec uj{sd(rng), sd(rng)};
    const Vec si = heat->source(ui, mi);
    const Vec sj = heat->source(uj, mj);
    const InterfaceSolve is = solve_interface(
        ui, uj, heat->coeff_matrix(mi), heat->coeff_matrix(mj), si, sj, 0.2, *heat);
    const Vec rhs = matvec(is.a_tilde, uj - ui) - delta_v(si, sj, 0.2);
    const double scale = std::max(1.0, rhs.inf_norm());
    worst = std::max(worst, (is.d_minus + is.d_plus - rhs).inf_norm() / scale);
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("intermediate states") {
  const auto heat = heat_model();
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> kd(0.05, 5.0), sd(-3.0, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MediumCell mi = heat_cell(kd(rng), 1.0, 0.05, sd(rng));
    const MediumCell mj = heat_cell(kd(rng), 1.0, 0.05, sd(rng));
    const Vec ui{sd(rng), sd(rng)};
    const Vec uj{sd(rng), sd(rng)};
    const Vec si = heat->source(ui, mi);
    const Vec sj = heat->source(uj, mj);
    const InterfaceSolve is = solve_interface(
        ui, uj, heat->coeff_matrix(mi), heat->coeff_matrix(mj), si, sj, 0.2, *heat);
    const auto [um, up] = intermediate_states(is, ui, uj);
    const Vec res = matvec(is.a_tilde, up - um) - delta_v(si, sj, 0.2);
    worst = std::max(worst, res.inf_norm() /
                                std::max(1.0, delta_v(si, sj, 0.2).inf_norm()));
  }
  CHECK(worst <= 1e-13);

  // homogeneous input: both intermediate states coincide
  const auto ac = acoustics_model();
  const Mat a = ac->coeff_matrix(acoustics_cell(1.0, 1.0));
  const InterfaceSolve is = solve_interface(Vec{0.2, -0.1}, Vec{1.0, 0.4}, a, a,
                                            Vec(2), Vec(2), 0.1, *ac);
  const auto [um, up] = intermediate_states(is, Vec{0.2, -0.1}, Vec{1.0, 0.4});
  CHECK((up - um).inf_norm() <= 1e-14);
}

TEST_CASE("intermediate states reject resonant standing waves") {
  InterfaceSolve is;
  is.a_tilde = Mat::identity(2);
  is.decomp.lambdas = Vec{0.0, 1.0};
  is.decomp.p = Mat::identity(2);
  is.decomp.pinv = Mat::identity(2);
  is.alpha = Vec{0.3, 0.3};
  is.beta = Vec{0.5, 0.0};  // nonzero source projection on the standing wave
  is.d_minus = Vec(2);
  is.d_plus = Vec(2);
  CHECK_THROWS_AS(intermediate_states(is, Vec{0.0, 0.0}, Vec{1.0, 1.0}),
                  ResonantSourceError);
}

TEST_CASE("homogeneous limit matches |A|-based upwinding") {
  // D- - D+ = -|A~| dU must hold when dV = 0; |A~| built independently from
  // the closed-form eigenvectors
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> par(0.1, 10.0), sd(-2.0, 2.0);
  const auto ac = acoustics_model();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Mat ai = ac->coeff_matrix(acoustics_cell(par(rng), par(rng)));
    const Mat aj = ac->coeff_matrix(acoustics_cell(par(rng), par(rng)));
    const Vec ui{sd(rng), sd(rng)};
    const Vec uj{sd(rng), sd(rng)};
    const InterfaceSolve is =
        solve_interface(ui, uj, ai, aj, Vec(2), Vec(2), 0.1, *ac);
    const EigenDecomposition d = is.decomp;
    Mat abs_a(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int m = 0; m < 2; ++m)
          s += d.p(i, m) * std::abs(d.lambdas[m]) * d.pinv(m, j);
        abs_a(i, j) = s;
      }
    const Vec lhs = is.d_minus - is.d_plus;
    const Vec rhs = -1.0 * matvec(abs_a, uj - ui);
    worst = std::max(worst, (lhs - rhs).inf_norm());
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("constant state with extrapolation is a bitwise fixed point") {
  const Grid g = build_grid(0, 1, 50);
  const MediumField med = sample_acoustics_medium(
      g, [](double) { return 1.0; }, [](double x) { return x < 0.6 ? 1.0 : 4.0; });
  BoundarySpec bc;
  bc.left.assign(2, {BcKind::kExtrapolate, 0.0});
  bc.right.assign(2, {BcKind::kExtrapolate, 0.0});
  FluctuationScheme scheme(acoustics_model(), g, med, bc, 0.8);

  FieldState s(g, 2);
  for (int i = 1; i <= g.n_cells; ++i) s.set(i, Vec{0.37, -1.25});
  const FieldState before = s;
  for (int k = 0; k < 5; ++k) scheme.step(s);
  for (int i = 1; i <= g.n_cells; ++i)
    for (int m = 0; m < 2; ++m) CHECK(s.cell(i)[m] == before.cell(i)[m]);
}

TEST_CASE("one step on a seeded steady state is machine accurate") {
  const CaseSpec& spec = find_case("heat-steady-const-k");
  const SeededEquilibrium seed = seed_case_equilibrium(spec, 0.5);
  FluctuationScheme scheme(seed.problem.system, seed.problem.grid,
                           seed.problem.medium, seed.boundaries, 0.8);
  FieldState s = seed.state;
  scheme.step(s);
  double change = 0.0;
  for (int i = 1; i <= s.grid().n_cells; ++i)
    for (int m = 0; m < 2; ++m)
      change = std::max(change, std::abs(s.cell(i)[m] - seed.state.cell(i)[m]));
  CHECK(change <= 1e-13);
}

TEST_CASE("acoustics hump splits symmetrically and conserves pressure") {
  const CaseSpec& spec = find_case("acoustics-transient");
  const CaseProblem p = build_case_problem(spec, 0.01);
  FluctuationScheme scheme(p.system, p.grid, p.medium, spec.boundaries, 0.8);
  FieldState s(p.grid, 2);
  for (int i = 1; i <= p.grid.n_cells; ++i) s.set(i, spec.initial(p.grid.center(i)));
  const double p_before = [&] {
    double t = 0.0;
    for (int i = 1; i <= p.grid.n_cells; ++i) t += s.cell(i)[0];
    return t * p.grid.dx;
  }();
  StepStats stats;
  for (int k = 0; k < 10; ++k) scheme.step(s, &stats);
  double p_after = 0.0;
  for (int i = 1; i <= p.grid.n_cells; ++i) p_after += s.cell(i)[0];
  p_after *= p.grid.dx;
  CHECK(p_after == doctest::Approx(p_before).epsilon(1e-13));

  // symmetry about the hump center x = 0.4 while both waves are in x < 0.6
  const int c = 40;  // interface at 0.4 sits between cells 40 and 41
  double asym = 0.0;
  for (int off = 1; off <= 20; ++off)
    asym = std::max(asym, std::abs(s.cell(c + off)[0] - s.cell(c + 1 - off)[0]));
  CHECK(asym <= 1e-12);
}

TEST_CASE("unbalanced mode is bit-identical on homogeneous systems") {
  const CaseSpec& spec = find_case("acoustics-transient");
  const CaseProblem p = build_case_problem(spec, 0.02);
  FluctuationScheme balanced(p.system, p.grid, p.medium, spec.boundaries, 0.8,
                             SourceMode::kAugmented);
  FluctuationScheme unbalanced = make_unbalanced_scheme(p.system, p.grid, p.medium,
                                                        spec.boundaries, 0.8);
  FieldState a(p.grid, 2), b(p.grid, 2);
  for (int i = 1; i <= p.grid.n_cells; ++i) {
    a.set(i, spec.initial(p.grid.center(i)));
    b.set(i, spec.initial(p.grid.center(i)));
  }
  for (int k = 0; k < 20; ++k) {
    balanced.step(a);
    unbalanced.step(b);
  }
  for (int i = 1; i <= p.grid.n_cells; ++i)
    for (int m = 0; m < 2; ++m) CHECK(a.cell(i)[m] == b.cell(i)[m]);
}
