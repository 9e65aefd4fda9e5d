#include "wbfv/flux_solver.hpp"

#include <algorithm>
#include <cmath>

#include "wbfv/source_geometry.hpp"

namespace wbfv {

AugmentedBlocks build_blocks(const AugmentedSystem& sys, const Vec& ubar) {
  return {sys.flux_jacobian(ubar), sys.nonconservative_matrix(ubar), sys.flux(ubar)};
}

Mat roe_jacobian(const AugmentedBlocks& blocks_i, const AugmentedBlocks& blocks_ip1) {
  return 0.5 * (blocks_i.m + blocks_ip1.m);
}

Mat k_average(const AugmentedSystem& sys, const Vec& ubar_i, const Vec& ubar_ip1) {
  return sys.nonconservative_matrix(0.5 * (ubar_i + ubar_ip1));
}

InterfaceFluxSolve solve_interface_flux(const Vec& ubar_i, const Vec& ubar_ip1,
                                        const Vec& sbar_i, const Vec& sbar_ip1,
                                        double dx, const AugmentedSystem& sys) {
  const int n = ubar_i.size();
  const AugmentedBlocks bi = build_blocks(sys, ubar_i);
  const AugmentedBlocks bj = build_blocks(sys, ubar_ip1);

  InterfaceFluxSolve is;
  is.m_tilde = roe_jacobian(bi, bj);
  is.k_tilde = k_average(sys, ubar_i, ubar_ip1);
  is.decomp = sys.eigen(is.m_tilde);

  const Vec du = ubar_ip1 - ubar_i;
  const Vec dv = delta_v(sbar_i, sbar_ip1, dx);
  const Vec rhs = matvec(is.k_tilde, du) + dv;
  is.alpha = matvec(is.decomp.pinv, du);
  is.beta = matvec(is.decomp.pinv, rhs);
  if (!is.alpha.all_finite() || !is.beta.all_finite())
    throw NumericalError("solve_interface_flux: non-finite wave/source strengths");

  double lambda_max = 0.0;
  for (int m = 0; m < n; ++m) lambda_max = std::max(lambda_max, std::abs(is.decomp.lambdas[m]));

  is.d_minus = Vec(n);
  is.d_plus = Vec(n);
  for (int m = 0; m < n; ++m) {
    const double lam = is.decomp.lambdas[m];
    if (is_zero_wave(lam, lambda_max)) {
      const double half = -0.5 * is.beta[m];
      for (int c = 0; c < n; ++c) {
        is.d_minus[c] += half * is.decomp.p(c, m);
        is.d_plus[c] += half * is.decomp.p(c, m);
      }
    } else {
      const double strength = lam * is.alpha[m] - is.beta[m];
      Vec& target = lam < 0.0 ? is.d_minus : is.d_plus;
      for (int c = 0; c < n; ++c) target[c] += strength * is.decomp.p(c, m);
    }
  }
  is.f_minus = bi.flux + is.d_minus;
  is.f_plus = bj.flux - is.d_plus;
  return is;
}

FluxScheme::FluxScheme(std::shared_ptr<const AugmentedSystem> sys,
                       std::shared_ptr<const SystemModel> base, Grid grid,
                       MediumField medium, BoundarySpec bc, double cfl)
    : sys_(std::move(sys)),
      base_(std::move(base)),
      grid_(grid),
      medium_(std::move(medium)),
      bc_(std::move(bc)),
      cfl_(cfl),
      n_(sys_->dim()),
      n_phys_(sys_->phys_dim()) {
  const int nc = grid_.n_cells;
  if (static_cast<int>(medium_.size()) != nc + 2)
    throw ConfigError("medium field size does not match grid");
  if (base_->dim() != n_phys_)
    throw ConfigError("augmented/base system dimension mismatch");

  // Same wave-speed bound as the fluctuation form (the augmentation only adds
  // standing waves), so both forms take identical time steps.
  std::vector<Mat> cell_a(nc + 2);
  for (int i = 0; i <= nc + 1; ++i) cell_a[i] = base_->coeff_matrix(medium_[i]);
  for (int i = 1; i <= nc; ++i) {
    const EigenDecomposition d = base_->eigen(cell_a[i]);
    for (int m = 0; m < n_phys_; ++m)
      lambda_max_ = std::max(lambda_max_, std::abs(d.lambdas[m]));
  }
  for (int i = 0; i <= nc; ++i) {
    const EigenDecomposition d = base_->eigen(interface_average(cell_a[i], cell_a[i + 1]));
    for (int m = 0; m < n_phys_; ++m)
      lambda_max_ = std::max(lambda_max_, std::abs(d.lambdas[m]));
  }
}

FieldState FluxScheme::augment_state(const FieldState& phys) const {
  FieldState aug(grid_, n_);
  aug.t = phys.t;
  aug.step = phys.step;
  for (int i = 0; i <= grid_.n_cells + 1; ++i)
    aug.set(i, sys_->augment(phys.get(i), medium_[i]));
  return aug;
}

FieldState FluxScheme::project_state(const FieldState& aug) const {
  FieldState phys(grid_, n_phys_);
  phys.t = aug.t;
  phys.step = aug.step;
  for (int i = 0; i <= grid_.n_cells + 1; ++i)
    phys.set(i, sys_->project(aug.get(i)));
  return phys;
}

void FluxScheme::step(FieldState& state, StepStats* stats, double dt_cap) {
  const int nc = grid_.n_cells;
  const double dx = grid_.dx;

  // Ghost fill: physical components by the boundary rules, coefficients from
  // the ghost medium.
  {
    const Vec left = ghost_values(sys_->project(state.get(1)), bc_.left, *base_,
                                  medium_[0], medium_[1], dx, true);
    const Vec right = ghost_values(sys_->project(state.get(nc)), bc_.right, *base_,
                                   medium_[nc + 1], medium_[nc], dx, false);
    state.set(0, sys_->augment(left, medium_[0]));
    state.set(nc + 1, sys_->augment(right, medium_[nc + 1]));
  }

  double dt = cfl_dt(grid_, lambda_max_, cfl_);
  if (dt_cap > 0.0) dt = std::min(dt, dt_cap);

  std::vector<Vec> sbar(nc + 2);
  for (int i = 0; i <= nc + 1; ++i) sbar[i] = sys_->source(state.get(i), medium_[i]);

  std::vector<InterfaceFluxSolve> solves(nc + 1);
  double worst_residual = 0.0;
  for (int i = 0; i <= nc; ++i) {
    solves[i] = solve_interface_flux(state.get(i), state.get(i + 1),
                                     sbar[i], sbar[i + 1], dx, *sys_);
    if (stats) {
      const InterfaceFluxSolve& is = solves[i];
      const Vec du = state.get(i + 1) - state.get(i);
      const Vec dv = delta_v(sbar[i], sbar[i + 1], dx);
      const Vec rhs = matvec(is.k_tilde, du) + dv;
      const Vec expect = matvec(is.m_tilde, du) - rhs;  // = A_tilde dU - dV embedded
      double scale = std::max(1.0, std::max(matvec(is.m_tilde, du).inf_norm(), rhs.inf_norm()));
      const double res = (is.d_minus + is.d_plus - expect).inf_norm();
      worst_residual = std::max(worst_residual, res / scale);
    }
  }

  const double coef = dt / dx;
  for (int i = 1; i <= nc; ++i) {
    Vec u = state.get(i);
    u -= coef * (solves[i].f_minus - solves[i - 1].f_plus);
    state.set(i, u);
  }

  state.t += dt;
  state.step += 1;
  if (stats) {
    stats->dt = dt;
    stats->fluctuation_residual = std::max(stats->fluctuation_residual, worst_residual);
  }
}

}  // namespace wbfv
