#include <cmath>
#include <random>

#include "doctest.h"
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

TEST_CASE("acoustics eigenstructure") {
  const auto ac = acoustics_model();
  {
    const Mat a = ac->coeff_matrix(acoustics_cell(1.0, 1.0));
    const EigenDecomposition d = ac->eigen(a);
    CHECK(d.lambdas[0] == doctest::Approx(-1.0));
    CHECK(d.lambdas[1] == doctest::Approx(1.0));
    const DecompositionResiduals r = validate_decomposition(a, d);
    CHECK(r.reconstruction <= 1e-14);
    CHECK(r.inverse <= 1e-14);
  }
  {
    const EigenDecomposition d = ac->eigen(ac->coeff_matrix(acoustics_cell(1.0, 4.0)));
    CHECK(d.lambdas[0] == doctest::Approx(-0.5));
    CHECK(d.lambdas[1] == doctest::Approx(0.5));
  }
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> par(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = ac->coeff_matrix(acoustics_cell(par(rng), par(rng)));
    const DecompositionResiduals r = validate_decomposition(a, ac->eigen(a));
    CHECK(r.reconstruction <= 1e-13 * std::max(1.0, a.inf_norm()));
    CHECK(r.inverse <= 1e-13);
  }
}

TEST_CASE("heat eigenstructure") {
  const auto heat = heat_model();
  const Mat a = heat->coeff_matrix(heat_cell(1.0, 1.0, 1.0));
  const EigenDecomposition d = heat->eigen(a);
  CHECK(d.lambdas[0] == doctest::Approx(-1.0));
  CHECK(d.lambdas[1] == doctest::Approx(1.0));
  const DecompositionResiduals r = validate_decomposition(a, d);
  CHECK(r.reconstruction <= 1e-14);

  const double eps = 0.05;
  const EigenDecomposition d2 = heat->eigen(heat->coeff_matrix(heat_cell(0.05, 1.0, eps)));
  CHECK(d2.lambdas[1] == doctest::Approx(std::sqrt(0.05 / eps)));
}

TEST_CASE("augmented heat blocks and spectrum") {
  const double r = 1.0, eps = 0.05;
  const HeatAugmentedSystem sys(r, eps);
  const Vec ubar = sys.augment(Vec{0.7, -1.0}, heat_cell(2.0, r, eps));
  CHECK(ubar[2] == 2.0);

  const Mat m = sys.flux_jacobian(ubar);
  CHECK(m(0, 1) == doctest::Approx(r));
  CHECK(m(1, 0) == doctest::Approx(2.0 / eps));
  CHECK(m(1, 2) == doctest::Approx(0.7 / eps));
  CHECK(m(2, 0) == 0.0);
  CHECK(m(2, 2) == 0.0);

  const EigenDecomposition d = sys.eigen(m);
  const double c = std::sqrt(2.0 * r / eps);
  CHECK(d.lambdas[0] == doctest::Approx(-c));
  CHECK(d.lambdas[1] == doctest::Approx(0.0));
  CHECK(d.lambdas[2] == doctest::Approx(c));
  const DecompositionResiduals res = validate_decomposition(m, d);
  CHECK(res.reconstruction <= 1e-12 * std::max(1.0, m.inf_norm()));
  CHECK(res.inverse <= 1e-12);
}

TEST_CASE("full augmentation layout and round trip") {
  const auto ac = acoustics_model();
  const FullAugmentation sys(ac);
  CHECK(sys.dim() == 6);

  MediumCell m = acoustics_cell(1.0, 1.0);
  // coefficient matrix [[0,1],[3,0]] corresponds to K = 1, rho = 1/3
  m.p[AcousticsMedium::kDensity] = 1.0 / 3.0;
  const Vec ubar = sys.augment(Vec{1.0, 2.0}, m);
  const double expect[6] = {1, 2, 0, 1, 3, 0};
  for (int i = 0; i < 6; ++i) CHECK(ubar[i] == doctest::Approx(expect[i]));

  const Vec back = sys.project(ubar);
  CHECK(back[0] == 1.0);
  CHECK(back[1] == 2.0);

  // with U = 0 the coupling block vanishes: M equals the embedded base matrix
  const Vec zero_state = sys.augment(Vec{0.0, 0.0}, m);
  const Mat mj = sys.flux_jacobian(zero_state);
  for (int i = 0; i < 6; ++i)
    for (int j = 2; j < 6; ++j) CHECK(mj(i, j) == 0.0);
  CHECK(mj(0, 1) == doctest::Approx(1.0));
  CHECK(mj(1, 0) == doctest::Approx(3.0));
}

TEST_CASE("epsilon_for") {
  // the constraint constant simplifies to 1/sqrt(2)
  const double k1 = (1.0 - 1.0 / std::sqrt(2.0)) / (std::sqrt(2.0) - 1.0);
  CHECK(k1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(epsilon_for(0.5, 0.01) == doctest::Approx(0.0070711).epsilon(1e-4));
  CHECK_THROWS_AS(epsilon_for(0.5, 0.0), ConfigError);
  CHECK_THROWS_AS(epsilon_for(0.0, 0.01), ConfigError);
}

TEST_CASE("sine steady state") {
  {
    const AnalyticalSolution sol = analytic_sine_steady(1.0, 0.0, 2.0);
    const auto k = sine_conductivity(1.0, 0.0, 2.0);
    CHECK(k(3.7) == doctest::Approx(0.5));
    CHECK(sol.eval(3.0, 0.0)[0] == doctest::Approx(6.0));
    CHECK(sol.eval(3.0, 0.0)[1] == doctest::Approx(-1.0));
  }
  {
    const AnalyticalSolution sol = analytic_sine_steady(1.0, 1.8, 2.0);
    CHECK(sol.eval(10.0, 0.0)[0] == doctest::Approx(21.51026).epsilon(1e-5));
    CHECK(sol.eval(0.3, 0.0)[1] == doctest::Approx(-1.0));
    CHECK(sol.eval(7.9, 0.0)[1] == doctest::Approx(-1.0));
  }
  CHECK_THROWS_AS(analytic_sine_steady(1.0, 2.0, 1.0), ConfigError);
}

TEST_CASE("piecewise steady state") {
  const AnalyticalSolution sol = analytic_piecewise_steady(1.0, 1.0, 4.0, 0.0, 0.0, 10.0);
  CHECK(sol.eval(10.0, 0.0)[0] == doctest::Approx(-2.5).epsilon(1e-14));
  // slope du/dx = -q/k on each side of the jump; q = -M everywhere (the
  // boundary flux convention, matching the increasing sine-case profiles)
  const double h = 1e-6;
  const double slope_left =
      (sol.eval(2.0 + h, 0.0)[0] - sol.eval(2.0 - h, 0.0)[0]) / (2 * h);
  const double slope_right =
      (sol.eval(8.0 + h, 0.0)[0] - sol.eval(8.0 - h, 0.0)[0]) / (2 * h);
  CHECK(slope_left == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(slope_right == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(sol.eval(4.0, 0.0)[1] == doctest::Approx(-1.0));
  CHECK(sol.eval(6.0, 0.0)[1] == doctest::Approx(-1.0));

  // the delta = dx variant differs from delta = 0 only around the layer
  const AnalyticalSolution eq = analytic_piecewise_steady(1.0, 1.0, 4.0, 0.5, 0.0, 10.0);
  CHECK(eq.eval(9.0, 0.0)[0] == doctest::Approx(sol.eval(9.0, 0.0)[0]).epsilon(1e-12));
  CHECK(std::abs(eq.eval(2.0, 0.0)[0] - sol.eval(2.0, 0.0)[0]) > 1e-3);
}

TEST_CASE("source steady state") {
  const AnalyticalSolution sol = analytic_source_steady(-1.0, 0.0, 0.5, 3.0, 0.0);
  CHECK(sol.eval(10.0, 0.0)[1] == doctest::Approx(4.0));
  // u_out = -(phi/2k) b^2 - q(a) b / k with u(a) = 0
  CHECK(sol.eval(10.0, 0.0)[0] == doctest::Approx(-0.5 / 6.0 * 100.0 + 10.0 / 3.0));
  // phi = 0 reduces to the linear constant-k profile
  const AnalyticalSolution lin = analytic_source_steady(-1.0, 0.0, 0.0, 3.0, 0.0);
  CHECK(lin.eval(6.0, 0.0)[0] == doctest::Approx(2.0));
}

TEST_CASE("erf transient solution") {
  const AnalyticalSolution sol = analytic_erf_transient(0.05);
  CHECK(sol.eval(5.0, 1.0)[0] == doctest::Approx(0.0));
  CHECK(sol.eval(5.0, 7.3)[0] == doctest::Approx(0.0));
  CHECK(sol.eval(5.0, 2.0)[1] == doctest::Approx(-0.089206).epsilon(1e-4));
  CHECK(sol.eval(100.0, 2.0)[0] == doctest::Approx(1.0));
  CHECK(sol.eval(-90.0, 2.0)[0] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(sol.eval(5.0, 0.0), ConfigError);

  // the evaluator satisfies the parabolic limit u_t = k u_xx
  const double k = 0.05, dx = 1e-3, dt = 1e-3;
  double worst = 0.0;
  for (double x : {4.6, 5.0, 5.2, 5.9}) {
    for (double t : {1.0, 2.0, 5.0}) {
      const double ut =
          (sol.eval(x, t + dt)[0] - sol.eval(x, t - dt)[0]) / (2 * dt);
      const double uxx = (sol.eval(x + dx, t)[0] - 2 * sol.eval(x, t)[0] +
                          sol.eval(x - dx, t)[0]) /
                         (dx * dx);
      worst = std::max(worst, std::abs(ut - k * uxx));
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("acoustic impedance coefficients") {
  {
    const InterfaceCoefficients c = acoustic_interface_coefficients(1, 1, 1, 1);
    CHECK(c.reflection == doctest::Approx(0.0));
    CHECK(c.transmission == doctest::Approx(1.0));
  }
  {
    const InterfaceCoefficients c = acoustic_interface_coefficients(1, 1, 1, 4);
    CHECK(c.reflection == doctest::Approx(1.0 / 3.0));
    CHECK(c.transmission == doctest::Approx(4.0 / 3.0));
  }
  {
    const InterfaceCoefficients a = acoustic_interface_coefficients(2, 3, 0.4, 0.7);
    const InterfaceCoefficients b = acoustic_interface_coefficients(0.4, 0.7, 2, 3);
    CHECK(a.reflection == doctest::Approx(-b.reflection));
  }
}
