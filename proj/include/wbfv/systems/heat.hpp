#pragma once

// Hyperbolic (Cattaneo) heat equation:
//   u_t + r(x) q_x = r(x) phi          r = 1/(c rho)
//   q_t + (k(x)/eps) u_x = -q/eps
// in its original 2x2 form, in the reduced conservative augmentation
// [u, q, k], and in the generic full augmentation that appends every
// coefficient-matrix entry.  Also hosts the analytical solution library used
// as benchmark references.

#include <functional>
#include <memory>

#include "wbfv/system.hpp"

namespace wbfv {

struct HeatMedium {
  static constexpr int kConductivity = 0;
  static constexpr int kInvCapacity = 1;  // r = 1/(c rho)
  static constexpr int kRelaxation = 2;   // eps
  static constexpr int kSource = 3;       // phi
  static double k(const MediumCell& m) { return m.p[kConductivity]; }
  static double r(const MediumCell& m) { return m.p[kInvCapacity]; }
  static double eps(const MediumCell& m) { return m.p[kRelaxation]; }
  static double phi(const MediumCell& m) { return m.p[kSource]; }
};

class HeatSystem final : public SystemModel {
 public:
  int dim() const override { return 2; }
  std::string name() const override { return "heat"; }
  std::vector<std::string> component_names() const override { return {"u", "q"}; }

  Mat coeff_matrix(const MediumCell& m) const override;
  Vec source(const Vec& u, const MediumCell& m) const override;
  EigenDecomposition eigen(const Mat& a) const override;
};

std::shared_ptr<const SystemModel> heat_model();

// Reduced conservative augmentation [u, q, k]: only the conductivity varies
// in space, so it is the single appended component.  r and eps are global
// constants of the run.
class HeatAugmentedSystem final : public AugmentedSystem {
 public:
  HeatAugmentedSystem(double r, double eps) : r_(r), eps_(eps) {
    if (!(r > 0.0 && eps > 0.0))
      throw ConfigError("heat augmentation: r and eps must be positive");
  }

  int dim() const override { return 3; }
  int phys_dim() const override { return 2; }

  Vec augment(const Vec& u, const MediumCell& m) const override;
  Mat flux_jacobian(const Vec& ubar) const override;
  Mat nonconservative_matrix(const Vec& ubar) const override;
  Vec flux(const Vec& ubar) const override;
  Vec source(const Vec& ubar, const MediumCell& m) const override;
  EigenDecomposition eigen(const Mat& m_tilde) const override;

 private:
  double r_;
  double eps_;
};

std::shared_ptr<const AugmentedSystem> heat_model_augmented(double r, double eps);

// General augmentation of an arbitrary (small) system: the state grows by all
// n^2 coefficient entries in row-major order.  Kept as the faithful general
// path; exercised with acoustics.
class FullAugmentation final : public AugmentedSystem {
 public:
  explicit FullAugmentation(std::shared_ptr<const SystemModel> base);

  int dim() const override { return n_ + n_ * n_; }
  int phys_dim() const override { return n_; }

  Vec augment(const Vec& u, const MediumCell& m) const override;
  Mat flux_jacobian(const Vec& ubar) const override;
  Mat nonconservative_matrix(const Vec& ubar) const override;
  Vec flux(const Vec& ubar) const override;
  Vec source(const Vec& ubar, const MediumCell& m) const override;
  EigenDecomposition eigen(const Mat& m_tilde) const override;

 private:
  std::shared_ptr<const SystemModel> base_;
  int n_;
};

// Relaxation time from the first-order accuracy constraint
// eps = safety * dx / K1 with K1 = (1 - 2^{-1/2}) / (2^{1/2} - 1) = 1/sqrt(2).
double epsilon_for(double dx, double safety);

MediumField sample_heat_medium(const Grid& grid,
                               const std::function<double(double)>& conductivity,
                               double r, double eps,
                               const std::function<double(double)>& phi);

struct AnalyticalSolution {
  std::function<Vec(double x, double t)> eval;
  bool steady = true;
};

// Steady state with k(x) = M / (W sin x + C), u = -W cos x + C x, q = -M.
// Requires |C| > |W| so the conductivity stays positive and bounded.
AnalyticalSolution analytic_sine_steady(double m, double w, double c);
std::function<double(double)> sine_conductivity(double m, double w, double c);

// Steady state across a piecewise-constant conductivity with a transition
// layer of thickness delta and conductivity (k1+k2)/2 centered at the domain
// midpoint.  delta = 0 is the pure-jump solution; delta = dx reproduces the
// discrete equilibrium the scheme converges to.  q = -m everywhere; u is
// continuous piecewise linear, anchored at u(b) = -m*b/k2.
AnalyticalSolution analytic_piecewise_steady(double m, double k1, double k2,
                                             double delta, double a, double b);

// Steady state with constant external source phi and constant k:
// q(x) = q_a + phi (x - a), u(x) = u_a - q_a (x-a)/k - phi (x-a)^2 / (2k).
AnalyticalSolution analytic_source_steady(double q_a, double u_a, double phi,
                                          double k, double a);

// Transient similarity solution of the parabolic limit for the +/-1
// temperature Riemann problem centered at x = 5.
AnalyticalSolution analytic_erf_transient(double k);

}  // namespace wbfv
