#include "wbfv/systems/acoustics.hpp"

#include <cmath>

#include "wbfv/systems/common.hpp"

namespace wbfv {

EigenDecomposition eigen_antidiagonal(double a01, double a10) {
  if (!(a01 > 0.0 && a10 > 0.0))
    throw NumericalError("eigen_antidiagonal: off-diagonal entries must be positive");
  const double c = std::sqrt(a01 * a10);
  const double w = std::sqrt(a01 / a10);
  EigenDecomposition d;
  d.lambdas = Vec{-c, c};
  d.p = Mat(2, {-w, w, 1.0, 1.0});
  d.pinv = Mat(2, {-0.5 / w, 0.5, 0.5 / w, 0.5});
  return d;
}

Mat AcousticsSystem::coeff_matrix(const MediumCell& m) const {
  return Mat(2, {0.0, AcousticsMedium::bulk_modulus(m),
                 1.0 / AcousticsMedium::density(m), 0.0});
}

Vec AcousticsSystem::source(const Vec&, const MediumCell&) const { return Vec{0.0, 0.0}; }

EigenDecomposition AcousticsSystem::eigen(const Mat& a) const {
  return eigen_antidiagonal(a(0, 1), a(1, 0));
}

std::shared_ptr<const SystemModel> acoustics_model() {
  static const auto model = std::make_shared<const AcousticsSystem>();
  return model;
}

MediumField sample_acoustics_medium(const Grid& grid,
                                    const std::function<double(double)>& bulk_modulus,
                                    const std::function<double(double)>& density) {
  MediumField field(grid.n_cells + 2);
  for (int i = 1; i <= grid.n_cells; ++i) {
    const double x = grid.center(i);
    MediumCell& m = field[i];
    m.p[AcousticsMedium::kBulkModulus] = bulk_modulus(x);
    m.p[AcousticsMedium::kDensity] = density(x);
    if (!(m.p[0] > 0.0 && m.p[1] > 0.0))
      throw ConfigError("acoustics medium must have positive K and rho");
  }
  field[0] = field[1];
  field[grid.n_cells + 1] = field[grid.n_cells];
  return field;
}

InterfaceCoefficients acoustic_interface_coefficients(double k1, double rho1,
                                                      double k2, double rho2) {
  if (!(k1 > 0 && rho1 > 0 && k2 > 0 && rho2 > 0))
    throw ConfigError("acoustic_interface_coefficients: parameters must be positive");
  const double z1 = std::sqrt(k1 * rho1);
  const double z2 = std::sqrt(k2 * rho2);
  return {(z2 - z1) / (z2 + z1), 2.0 * z2 / (z1 + z2)};
}

}  // namespace wbfv
