#pragma once

// Augmented Roe scheme in flux form: the spatially varying coefficients ride
// along as conserved components, the convective part becomes a genuine
// (bilinear) flux with Jacobian M, and the nonconservative remainder K enters
// the interface solve next to the source integral.  Provably equivalent to
// the fluctuation form; kept as an independently stepped implementation.

#include <memory>
#include <vector>

#include "wbfv/boundary.hpp"
#include "wbfv/fluctuation_solver.hpp"  // StepStats, zero-wave policy
#include "wbfv/grid.hpp"
#include "wbfv/system.hpp"

namespace wbfv {

struct AugmentedBlocks {
  Mat m;     // flux Jacobian
  Mat k;     // nonconservative coefficient matrix (the B block)
  Vec flux;  // F(Ubar)
};

AugmentedBlocks build_blocks(const AugmentedSystem& sys, const Vec& ubar);

// Roe average of the flux Jacobian; satisfies dF = M_tilde dUbar exactly for
// the bilinear fluxes at hand.
Mat roe_jacobian(const AugmentedBlocks& blocks_i, const AugmentedBlocks& blocks_ip1);

// Straight-line-path average of the nonconservative matrix: K evaluated at
// the arithmetic mean state.
Mat k_average(const AugmentedSystem& sys, const Vec& ubar_i, const Vec& ubar_ip1);

struct InterfaceFluxSolve {
  Mat m_tilde;
  Mat k_tilde;
  EigenDecomposition decomp;
  Vec alpha;    // Pinv dUbar
  Vec beta;     // Pinv (K_tilde dUbar + dVbar)
  Vec d_minus;
  Vec d_plus;
  Vec f_minus;  // F_i + D-
  Vec f_plus;   // F_{i+1} - D+
};

InterfaceFluxSolve solve_interface_flux(const Vec& ubar_i, const Vec& ubar_ip1,
                                        const Vec& sbar_i, const Vec& sbar_ip1,
                                        double dx, const AugmentedSystem& sys);

// Flux-form stepper.  Operates on an augmented FieldState whose trailing
// components are the per-cell coefficients; they are bitwise invariant under
// stepping.  Boundary rules apply to the physical components via the base
// system; ghost coefficients are re-sampled from the ghost medium.
class FluxScheme {
 public:
  FluxScheme(std::shared_ptr<const AugmentedSystem> sys,
             std::shared_ptr<const SystemModel> base, Grid grid,
             MediumField medium, BoundarySpec bc, double cfl);

  void step(FieldState& aug_state, StepStats* stats = nullptr, double dt_cap = 0.0);

  // Builds the augmented state from a physical one.
  FieldState augment_state(const FieldState& phys) const;
  // Extracts the physical components.
  FieldState project_state(const FieldState& aug) const;

  double max_wavespeed() const { return lambda_max_; }

 private:
  std::shared_ptr<const AugmentedSystem> sys_;
  std::shared_ptr<const SystemModel> base_;
  Grid grid_;
  MediumField medium_;
  BoundarySpec bc_;
  double cfl_;
  int n_;       // augmented dimension
  int n_phys_;
  double lambda_max_ = 0.0;  // from the base system; matches the fluctuation form
};

}  // namespace wbfv
