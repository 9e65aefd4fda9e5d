#include "wbfv/properties.hpp"

#include <cmath>
#include <random>

#include "wbfv/equilibrium.hpp"
#include "wbfv/fluctuation_solver.hpp"
#include "wbfv/flux_solver.hpp"
#include "wbfv/systems/acoustics.hpp"
#include "wbfv/systems/heat.hpp"

namespace wbfv {

namespace {

MediumCell random_acoustics_cell(std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(0.1, 10.0);
  MediumCell m;
  m.p[AcousticsMedium::kBulkModulus] = coef(rng);
  m.p[AcousticsMedium::kDensity] = coef(rng);
  return m;
}

MediumCell random_heat_cell(std::mt19937& rng, double r, double eps) {
  std::uniform_real_distribution<double> k(0.05, 5.0);
  std::uniform_real_distribution<double> phi(-2.0, 2.0);
  MediumCell m;
  m.p[HeatMedium::kConductivity] = k(rng);
  m.p[HeatMedium::kInvCapacity] = r;
  m.p[HeatMedium::kRelaxation] = eps;
  m.p[HeatMedium::kSource] = phi(rng);
  return m;
}

Vec random_state(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> comp(-3.0, 3.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = comp(rng);
  return v;
}

PropertyResult check_eigendecompositions() {
  PropertyResult res{"eigendecomposition residuals", false, 0.0, 1e-12, ""};
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> rdist(0.1, 5.0);
  std::uniform_real_distribution<double> edist(1e-3, 1.0);

  const auto account = [&](const Mat& a, const EigenDecomposition& d) {
    const DecompositionResiduals r = validate_decomposition(a, d);
    const double scale = std::max(1.0, a.inf_norm());
    res.worst = std::max(res.worst, std::max(r.reconstruction / scale, r.inverse));
    for (int m = 1; m < d.lambdas.size(); ++m)
      if (d.lambdas[m] < d.lambdas[m - 1]) res.worst = std::max(res.worst, 1.0);
  };

  const auto ac = acoustics_model();
  const auto heat = heat_model();
  for (int trial = 0; trial < 300; ++trial) {
    {
      const Mat a = interface_average(ac->coeff_matrix(random_acoustics_cell(rng)),
                                      ac->coeff_matrix(random_acoustics_cell(rng)));
      account(a, ac->eigen(a));
    }
    const double r = rdist(rng), eps = edist(rng);
    {
      const Mat a = interface_average(heat->coeff_matrix(random_heat_cell(rng, r, eps)),
                                      heat->coeff_matrix(random_heat_cell(rng, r, eps)));
      account(a, heat->eigen(a));
    }
    {
      const HeatAugmentedSystem sys(r, eps);
      const Vec ui = sys.augment(random_state(rng, 2), random_heat_cell(rng, r, eps));
      const Vec uj = sys.augment(random_state(rng, 2), random_heat_cell(rng, r, eps));
      const Mat mt = roe_jacobian(build_blocks(sys, ui), build_blocks(sys, uj));
      account(mt, sys.eigen(mt));
    }
    {
      const FullAugmentation sys(ac);
      const Vec ui = sys.augment(random_state(rng, 2), random_acoustics_cell(rng));
      const Vec uj = sys.augment(random_state(rng, 2), random_acoustics_cell(rng));
      const Mat mt = roe_jacobian(build_blocks(sys, ui), build_blocks(sys, uj));
      account(mt, sys.eigen(mt));
    }
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "acoustics/heat base + both augmentations, 300 draws each";
  return res;
}

PropertyResult check_roe_property() {
  PropertyResult res{"Roe property of the averaged flux Jacobian", false, 0.0, 1e-13, ""};
  std::mt19937 rng(23456);
  std::uniform_real_distribution<double> rdist(0.1, 5.0);
  std::uniform_real_distribution<double> edist(1e-3, 1.0);

  const auto account = [&](const AugmentedSystem& sys, const Vec& ui, const Vec& uj) {
    const AugmentedBlocks bi = build_blocks(sys, ui);
    const AugmentedBlocks bj = build_blocks(sys, uj);
    const Vec df = bj.flux - bi.flux;
    const Vec lin = matvec(roe_jacobian(bi, bj), uj - ui);
    const double scale = std::max(1.0, std::max(df.inf_norm(), lin.inf_norm()));
    res.worst = std::max(res.worst, (df - lin).inf_norm() / scale);
  };

  const auto ac = acoustics_model();
  for (int trial = 0; trial < 1000; ++trial) {
    const double r = rdist(rng), eps = edist(rng);
    const HeatAugmentedSystem hs(r, eps);
    account(hs, hs.augment(random_state(rng, 2), random_heat_cell(rng, r, eps)),
            hs.augment(random_state(rng, 2), random_heat_cell(rng, r, eps)));
    const FullAugmentation fa(ac);
    account(fa, fa.augment(random_state(rng, 2), random_acoustics_cell(rng)),
            fa.augment(random_state(rng, 2), random_acoustics_cell(rng)));
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "dF = M_tilde dU over 1000 random interface pairs per augmentation";
  return res;
}

PropertyResult check_spectrum() {
  PropertyResult res{"augmented spectrum = base spectrum + zeros", false, 0.0, 1e-11, ""};
  std::mt19937 rng(34567);
  std::uniform_real_distribution<double> rdist(0.1, 5.0);
  std::uniform_real_distribution<double> edist(1e-3, 1.0);

  const auto account = [&](const AugmentedSystem& sys, const SystemModel& base,
                           const Vec& ui, const Vec& uj, const Mat& a_base) {
    const Mat mt = roe_jacobian(build_blocks(sys, ui), build_blocks(sys, uj));
    EigenDecomposition aug = sys.eigen(mt);
    EigenDecomposition bd = base.eigen(a_base);
    Vec expect(sys.dim());
    for (int m = 0; m < bd.lambdas.size(); ++m) expect[m] = bd.lambdas[m];
    EigenDecomposition tmp;
    tmp.lambdas = expect;
    tmp.p = Mat::identity(sys.dim());
    tmp.pinv = tmp.p;
    sort_eigen(tmp);
    const double scale = std::max(1.0, a_base.inf_norm());
    for (int m = 0; m < sys.dim(); ++m)
      res.worst = std::max(res.worst, std::abs(aug.lambdas[m] - tmp.lambdas[m]) / scale);
  };

  const auto ac = acoustics_model();
  const auto heat = heat_model();
  for (int trial = 0; trial < 300; ++trial) {
    {
      const double r = rdist(rng), eps = edist(rng);
      const HeatAugmentedSystem sys(r, eps);
      const MediumCell mi = random_heat_cell(rng, r, eps);
      const MediumCell mj = random_heat_cell(rng, r, eps);
      // The averaged Jacobian corresponds to the arithmetic mean conductivity.
      MediumCell mean = mi;
      mean.p[HeatMedium::kConductivity] =
          0.5 * (HeatMedium::k(mi) + HeatMedium::k(mj));
      account(sys, *heat, sys.augment(random_state(rng, 2), mi),
              sys.augment(random_state(rng, 2), mj), heat->coeff_matrix(mean));
    }
    {
      const FullAugmentation sys(ac);
      const MediumCell mi = random_acoustics_cell(rng);
      const MediumCell mj = random_acoustics_cell(rng);
      const Mat a_base = interface_average(ac->coeff_matrix(mi), ac->coeff_matrix(mj));
      account(sys, *ac, sys.augment(random_state(rng, 2), mi),
              sys.augment(random_state(rng, 2), mj), a_base);
    }
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "closed-form eigenvalues vs base eigenvalues plus appended zeros";
  return res;
}

PropertyResult check_fluctuation_identity() {
  PropertyResult res{"fluctuation sum identity", false, 0.0, 1e-12, ""};
  std::mt19937 rng(45678);
  std::uniform_real_distribution<double> rdist(0.1, 5.0);
  std::uniform_real_distribution<double> edist(1e-3, 1.0);
  std::uniform_real_distribution<double> dxdist(0.01, 1.0);

  const auto account = [&](const SystemModel& sys, const MediumCell& mi,
                           const MediumCell& mj, double dx) {
    const Vec ui = random_state(rng, sys.dim());
    const Vec uj = random_state(rng, sys.dim());
    const Mat ai = sys.coeff_matrix(mi);
    const Mat aj = sys.coeff_matrix(mj);
    const Vec si = sys.source(ui, mi);
    const Vec sj = sys.source(uj, mj);
    const InterfaceSolve is = solve_interface(ui, uj, ai, aj, si, sj, dx, sys);
    const Vec lhs = is.d_minus + is.d_plus;
    const Vec rhs = matvec(is.a_tilde, uj - ui) - delta_v(si, sj, dx);
    const double scale = std::max(1.0, rhs.inf_norm());
    res.worst = std::max(res.worst, (lhs - rhs).inf_norm() / scale);
  };

  const auto ac = acoustics_model();
  const auto heat = heat_model();
  for (int trial = 0; trial < 1000; ++trial) {
    account(*ac, random_acoustics_cell(rng), random_acoustics_cell(rng), dxdist(rng));
    const double r = rdist(rng), eps = edist(rng);
    account(*heat, random_heat_cell(rng, r, eps), random_heat_cell(rng, r, eps),
            dxdist(rng));
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "D- + D+ = A_tilde dU - dV over 1000 random interfaces per system";
  return res;
}

PropertyResult check_equilibrium_fixed_point() {
  PropertyResult res{"seeded equilibria are fixed points", false, 0.0, 1e-13, ""};
  const char* ids[] = {"heat-steady-const-k", "heat-steady-sine-k",
                       "heat-steady-piecewise-k", "heat-steady-source"};
  for (const char* id : ids) {
    const CaseSpec& spec = find_case(id);
    const SeededEquilibrium seed = seed_case_equilibrium(spec, 0.5);
    const Grid& grid = seed.problem.grid;

    {
      FluctuationScheme scheme(seed.problem.system, grid, seed.problem.medium,
                               seed.boundaries, spec.default_cfl);
      FieldState state = seed.state;
      for (int s = 0; s < 1000; ++s) scheme.step(state);
      for (int i = 1; i <= grid.n_cells; ++i)
        for (int m = 0; m < state.n_comp(); ++m) {
          const double drift = std::abs(state.cell(i)[m] - seed.state.cell(i)[m]);
          res.worst = std::max(res.worst,
                               drift / (1.0 + std::abs(seed.state.cell(i)[m])));
        }
    }
    {
      const CaseProblem aug = build_case_problem(spec, 0.5, 0.0, true);
      FluxScheme scheme(aug.augmented, aug.system, aug.grid, aug.medium,
                        seed.boundaries, spec.default_cfl);
      FieldState state = scheme.augment_state(seed.state);
      for (int s = 0; s < 1000; ++s) scheme.step(state);
      const FieldState phys = scheme.project_state(state);
      for (int i = 1; i <= aug.grid.n_cells; ++i)
        for (int m = 0; m < phys.n_comp(); ++m) {
          const double drift = std::abs(phys.cell(i)[m] - seed.state.cell(i)[m]);
          res.worst = std::max(res.worst,
                               drift / (1.0 + std::abs(seed.state.cell(i)[m])));
        }
    }
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "1000 steps on dx = 0.5 seeded equilibria, both balanced forms";
  return res;
}

PropertyResult check_form_equivalence() {
  PropertyResult res{"fluctuation and flux forms agree", false, 0.0, 1e-11, ""};
  const char* ids[] = {"heat-steady-piecewise-k", "acoustics-transient"};
  for (const char* id : ids) {
    const CaseSpec& spec = find_case(id);
    const double dx = spec.system_kind == "acoustics" ? 0.02 : 0.5;
    const CaseProblem p = build_case_problem(spec, dx, 0.0, true);

    FieldState a(p.grid, p.system->dim());
    for (int i = 1; i <= p.grid.n_cells; ++i) a.set(i, spec.initial(p.grid.center(i)));
    FieldState b = a;

    FluctuationScheme fluct(p.system, p.grid, p.medium, spec.boundaries,
                            spec.default_cfl);
    FluxScheme flux(p.augmented, p.system, p.grid, p.medium, spec.boundaries,
                    spec.default_cfl);
    FieldState baug = flux.augment_state(b);
    for (int s = 0; s < 50; ++s) {
      fluct.step(a);
      flux.step(baug);
    }
    const FieldState bp = flux.project_state(baug);
    double scale = 1.0;
    for (int i = 1; i <= p.grid.n_cells; ++i)
      for (int m = 0; m < a.n_comp(); ++m)
        scale = std::max(scale, std::abs(a.cell(i)[m]));
    for (int i = 1; i <= p.grid.n_cells; ++i)
      for (int m = 0; m < a.n_comp(); ++m)
        res.worst =
            std::max(res.worst, std::abs(a.cell(i)[m] - bp.cell(i)[m]) / scale);
  }
  res.passed = res.worst <= res.threshold;
  res.detail = "50 steps from identical data on a heat and an acoustics case";
  return res;
}

}  // namespace

std::vector<PropertyResult> run_property_suites() {
  std::vector<PropertyResult> out;
  out.push_back(check_eigendecompositions());
  out.push_back(check_roe_property());
  out.push_back(check_spectrum());
  out.push_back(check_fluctuation_identity());
  out.push_back(check_equilibrium_fixed_point());
  out.push_back(check_form_equivalence());
  return out;
}

}  // namespace wbfv
