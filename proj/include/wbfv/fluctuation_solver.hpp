#pragma once

// Augmented Roe scheme in fluctuation form: the source integral deltaV enters
// the interface Riemann solve as a singular contribution, so the update needs
// no separate source term.  Also hosts the shared zero-wave policy and the
// not-well-balanced stepping mode (homogeneous fluctuations + centered
// pointwise source) used as a contrast baseline.

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "wbfv/boundary.hpp"
#include "wbfv/grid.hpp"
#include "wbfv/source_geometry.hpp"
#include "wbfv/system.hpp"

namespace wbfv {

Mat interface_average(const Mat& a_i, const Mat& a_ip1);

// Waves with |lambda| below this threshold are classified as standing; their
// -beta contribution is split half/half between D- and D+.
inline bool is_zero_wave(double lambda, double lambda_max) {
  return std::abs(lambda) <= 1e-12 * std::max(1.0, lambda_max);
}

struct InterfaceSolve {
  Mat a_tilde;
  EigenDecomposition decomp;
  Vec alpha;    // Pinv * deltaU
  Vec beta;     // Pinv * deltaV
  Vec d_minus;  // sum over lambda < 0 of (lambda alpha - beta) e
  Vec d_plus;
};

InterfaceSolve solve_interface(const Vec& u_i, const Vec& u_ip1,
                               const Mat& a_i, const Mat& a_ip1,
                               const Vec& s_i, const Vec& s_ip1,
                               double dx, const SystemModel& sys);

// States adjacent to the interface singularity.  Throws ResonantSourceError
// if a standing wave carries a nonzero source projection.
std::pair<Vec, Vec> intermediate_states(const InterfaceSolve& is,
                                        const Vec& u_i, const Vec& u_ip1);

struct StepStats {
  double dt = 0.0;
  // max over interfaces of ||D- + D+ - (A_tilde dU - dV)||_inf / scale
  double fluctuation_residual = 0.0;
};

enum class SourceMode {
  kAugmented,   // deltaV inside the Riemann solve (well balanced)
  kUnbalanced,  // homogeneous fluctuations + dt * S(U_i) centered update
};

// Time stepper.  The coefficient matrices are time independent, so cell
// matrices, interface averages and their eigendecompositions are precomputed
// once; a step is then an O(N) sweep.
class FluctuationScheme {
 public:
  FluctuationScheme(std::shared_ptr<const SystemModel> sys, Grid grid,
                    MediumField medium, BoundarySpec bc, double cfl,
                    SourceMode mode = SourceMode::kAugmented);

  // Advances one step (dt capped by dt_cap when positive) and reports stats.
  void step(FieldState& state, StepStats* stats = nullptr, double dt_cap = 0.0);

  double max_wavespeed() const { return lambda_max_; }
  const SystemModel& system() const { return *sys_; }
  const MediumField& medium() const { return medium_; }
  const BoundarySpec& bc() const { return bc_; }

 private:
  std::shared_ptr<const SystemModel> sys_;
  Grid grid_;
  MediumField medium_;
  BoundarySpec bc_;
  double cfl_;
  SourceMode mode_;
  int n_;
  double lambda_max_ = 0.0;

  // Per-interface caches, interface i between cells i and i+1, i = 0..N.
  std::vector<double> lambda_;   // (N+1) * n
  std::vector<double> p_;        // (N+1) * n * n
  std::vector<double> pinv_;     // (N+1) * n * n
  std::vector<double> a_tilde_;  // (N+1) * n * n

  // Scratch reused across steps.
  std::vector<double> src_;      // (N+2) * n
  std::vector<double> dminus_;   // (N+1) * n
  std::vector<double> dplus_;    // (N+1) * n
};

}  // namespace wbfv
