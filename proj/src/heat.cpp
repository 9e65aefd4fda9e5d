#include "wbfv/systems/heat.hpp"

#include <cmath>

#include "wbfv/systems/common.hpp"

namespace wbfv {

Mat HeatSystem::coeff_matrix(const MediumCell& m) const {
  return Mat(2, {0.0, HeatMedium::r(m),
                 HeatMedium::k(m) / HeatMedium::eps(m), 0.0});
}

Vec HeatSystem::source(const Vec& u, const MediumCell& m) const {
  return Vec{HeatMedium::r(m) * HeatMedium::phi(m), -u[1] / HeatMedium::eps(m)};
}

EigenDecomposition HeatSystem::eigen(const Mat& a) const {
  return eigen_antidiagonal(a(0, 1), a(1, 0));
}

std::shared_ptr<const SystemModel> heat_model() {
  static const auto model = std::make_shared<const HeatSystem>();
  return model;
}

Vec HeatAugmentedSystem::augment(const Vec& u, const MediumCell& m) const {
  return Vec{u[0], u[1], HeatMedium::k(m)};
}

Mat HeatAugmentedSystem::flux_jacobian(const Vec& ubar) const {
  return Mat(3, {0.0, r_, 0.0,
                 ubar[2] / eps_, 0.0, ubar[0] / eps_,
                 0.0, 0.0, 0.0});
}

Mat HeatAugmentedSystem::nonconservative_matrix(const Vec& ubar) const {
  return Mat(3, {0.0, 0.0, 0.0,
                 0.0, 0.0, ubar[0] / eps_,
                 0.0, 0.0, 0.0});
}

Vec HeatAugmentedSystem::flux(const Vec& ubar) const {
  return Vec{r_ * ubar[1], ubar[2] * ubar[0] / eps_, 0.0};
}

Vec HeatAugmentedSystem::source(const Vec& ubar, const MediumCell& m) const {
  return Vec{r_ * HeatMedium::phi(m), -ubar[1] / eps_, 0.0};
}

EigenDecomposition HeatAugmentedSystem::eigen(const Mat& m_tilde) const {
  // Recover the averaged parameters from the matrix entries.
  const double k = m_tilde(1, 0) * eps_;
  const double u = m_tilde(1, 2) * eps_;
  if (!(k > 0.0)) throw NumericalError("heat augmented eigen: nonpositive conductivity");
  const double c = std::sqrt(k * r_ / eps_);
  const double w = std::sqrt(eps_ * r_ / k);
  EigenDecomposition d;
  d.lambdas = Vec{-c, 0.0, c};
  d.p = Mat(3, {-w, -u / k, w,
                1.0, 0.0, 1.0,
                0.0, 1.0, 0.0});
  d.pinv = Mat(3, {-0.5 / w, 0.5, -0.5 * u / (w * k),
                   0.0, 0.0, 1.0,
                   0.5 / w, 0.5, 0.5 * u / (w * k)});
  return d;
}

std::shared_ptr<const AugmentedSystem> heat_model_augmented(double r, double eps) {
  return std::make_shared<const HeatAugmentedSystem>(r, eps);
}

FullAugmentation::FullAugmentation(std::shared_ptr<const SystemModel> base)
    : base_(std::move(base)), n_(base_->dim()) {
  if (n_ + n_ * n_ > kMaxDim)
    throw ConfigError("full augmentation exceeds supported dimension");
}

Vec FullAugmentation::augment(const Vec& u, const MediumCell& m) const {
  const Mat a = base_->coeff_matrix(m);
  Vec ubar(dim());
  for (int i = 0; i < n_; ++i) ubar[i] = u[i];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) ubar[n_ + i * n_ + j] = a(i, j);
  return ubar;
}

namespace {

Mat coeff_from_trailing(const Vec& ubar, int n) {
  Mat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = ubar[n + i * n + j];
  return a;
}

// B block of the augmented Jacobian: B(i, i*n + k) = U_k.
void fill_b_block(Mat& m, const Vec& u, int n) {
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, n + i * n + k) = u[k];
}

}  // namespace

Mat FullAugmentation::flux_jacobian(const Vec& ubar) const {
  Mat m(dim());
  const Mat a = coeff_from_trailing(ubar, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = a(i, j);
  fill_b_block(m, project(ubar), n_);
  return m;
}

Mat FullAugmentation::nonconservative_matrix(const Vec& ubar) const {
  Mat m(dim());
  fill_b_block(m, project(ubar), n_);
  return m;
}

Vec FullAugmentation::flux(const Vec& ubar) const {
  const Mat a = coeff_from_trailing(ubar, n_);
  const Vec au = matvec(a, project(ubar));
  Vec f(dim());
  for (int i = 0; i < n_; ++i) f[i] = au[i];
  return f;
}

Vec FullAugmentation::source(const Vec& ubar, const MediumCell& m) const {
  const Vec s = base_->source(project(ubar), m);
  Vec sbar(dim());
  for (int i = 0; i < n_; ++i) sbar[i] = s[i];
  return sbar;
}

EigenDecomposition FullAugmentation::eigen(const Mat& m_tilde) const {
  const int nn = n_ * n_;
  Mat a(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a(i, j) = m_tilde(i, j);
  const EigenDecomposition base = base_->eigen(a);

  // X = A^{-1} B, column by column.
  std::array<Vec, kMaxDim> x{};
  for (int col = 0; col < nn; ++col) {
    Vec b(n_);
    for (int i = 0; i < n_; ++i) b[i] = m_tilde(i, n_ + col);
    x[col] = solve(a, b);
  }

  // Block structure: P = [[P_base, -X], [0, I]], Pinv = [[Pinv_base, Pinv_base X], [0, I]],
  // zero eigenvalues attached to the identity columns.
  EigenDecomposition d;
  d.lambdas = Vec(dim());
  d.p = Mat(dim());
  d.pinv = Mat(dim());
  for (int m = 0; m < n_; ++m) d.lambdas[m] = base.lambdas[m];
  for (int m = 0; m < nn; ++m) d.lambdas[n_ + m] = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      d.p(i, j) = base.p(i, j);
      d.pinv(i, j) = base.pinv(i, j);
    }
  for (int col = 0; col < nn; ++col) {
    for (int i = 0; i < n_; ++i) d.p(i, n_ + col) = -x[col][i];
    d.p(n_ + col, n_ + col) = 1.0;
    d.pinv(n_ + col, n_ + col) = 1.0;
    for (int row = 0; row < n_; ++row) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += base.pinv(row, j) * x[col][j];
      d.pinv(row, n_ + col) = s;
    }
  }
  sort_eigen(d);
  return d;
}

double epsilon_for(double dx, double safety) {
  if (!(dx > 0.0)) throw ConfigError("epsilon_for: dx must be positive");
  if (!(safety > 0.0)) throw ConfigError("epsilon_for: safety must be positive");
  const double k1 = (1.0 - std::pow(2.0, -0.5)) / (std::sqrt(2.0) - 1.0);
  // k1 simplifies to 1/sqrt(2); keep the defining expression and check it.
  if (std::abs(k1 - 1.0 / std::sqrt(2.0)) > 1e-15)
    throw NumericalError("epsilon_for: K1 identity violated");
  return safety * dx / k1;
}

MediumField sample_heat_medium(const Grid& grid,
                               const std::function<double(double)>& conductivity,
                               double r, double eps,
                               const std::function<double(double)>& phi) {
  if (!(r > 0.0 && eps > 0.0))
    throw ConfigError("heat medium: r and eps must be positive");
  MediumField field(grid.n_cells + 2);
  for (int i = 1; i <= grid.n_cells; ++i) {
    const double x = grid.center(i);
    MediumCell& m = field[i];
    m.p[HeatMedium::kConductivity] = conductivity(x);
    m.p[HeatMedium::kInvCapacity] = r;
    m.p[HeatMedium::kRelaxation] = eps;
    m.p[HeatMedium::kSource] = phi(x);
    if (!(m.p[HeatMedium::kConductivity] > 0.0))
      throw ConfigError("heat medium: conductivity must be positive");
  }
  field[0] = field[1];
  field[grid.n_cells + 1] = field[grid.n_cells];
  return field;
}

AnalyticalSolution analytic_sine_steady(double m, double w, double c) {
  if (!(std::abs(c) > std::abs(w)))
    throw ConfigError("sine steady state requires |C| > |W|");
  AnalyticalSolution sol;
  sol.steady = true;
  sol.eval = [=](double x, double) { return Vec{-w * std::cos(x) + c * x, -m}; };
  return sol;
}

std::function<double(double)> sine_conductivity(double m, double w, double c) {
  if (!(std::abs(c) > std::abs(w)))
    throw ConfigError("sine conductivity requires |C| > |W|");
  return [=](double x) { return m / (w * std::sin(x) + c); };
}

AnalyticalSolution analytic_piecewise_steady(double m, double k1, double k2,
                                             double delta, double a, double b) {
  if (!(k1 > 0.0 && k2 > 0.0)) throw ConfigError("piecewise steady: conductivities must be positive");
  if (!(delta >= 0.0 && delta < b - a)) throw ConfigError("piecewise steady: invalid layer thickness");
  const double mid = 0.5 * (a + b);
  const double x1 = mid - 0.5 * delta;
  const double x2 = mid + 0.5 * delta;
  const double kt = 0.5 * (k1 + k2);
  const double u_b = -m / k2 * b;
  // Integrate du/dx = -q/k = m/k downstream-to-upstream from u(b).
  const double u_x2 = u_b - (m / k2) * (b - x2);
  const double u_x1 = u_x2 - (m / kt) * (x2 - x1);
  AnalyticalSolution sol;
  sol.steady = true;
  sol.eval = [=](double x, double) {
    double u;
    if (x >= x2)
      u = u_b - (m / k2) * (b - x);
    else if (x >= x1)
      u = u_x2 - (m / kt) * (x2 - x);
    else
      u = u_x1 - (m / k1) * (x1 - x);
    return Vec{u, -m};
  };
  return sol;
}

AnalyticalSolution analytic_source_steady(double q_a, double u_a, double phi,
                                          double k, double a) {
  if (k == 0.0) throw ConfigError("source steady: k must be nonzero");
  AnalyticalSolution sol;
  sol.steady = true;
  sol.eval = [=](double x, double) {
    const double s = x - a;
    return Vec{u_a - q_a * s / k - 0.5 * phi * s * s / k, q_a + phi * s};
  };
  return sol;
}

AnalyticalSolution analytic_erf_transient(double k) {
  if (!(k > 0.0)) throw ConfigError("erf transient: k must be positive");
  AnalyticalSolution sol;
  sol.steady = false;
  sol.eval = [=](double x, double t) {
    if (!(t > 0.0)) throw ConfigError("erf transient: t must be positive");
    const double z = (x - 5.0) / (2.0 * std::sqrt(k * t));
    const double pi = 3.14159265358979323846;
    return Vec{std::erf(z), -k * std::exp(-z * z) / std::sqrt(k * pi * t)};
  };
  return sol;
}

}  // namespace wbfv
