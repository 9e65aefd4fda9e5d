#pragma once

// Linear acoustics in a heterogeneous medium:
//   p_t + K(x) u_x = 0
//   u_t + (1/rho(x)) p_x = 0
// Homogeneous (no source); all balance effort goes into the nonconservative
// products across medium jumps.

#include <functional>
#include <memory>

#include "wbfv/system.hpp"

namespace wbfv {

struct AcousticsMedium {
  static constexpr int kBulkModulus = 0;
  static constexpr int kDensity = 1;
  static double bulk_modulus(const MediumCell& m) { return m.p[kBulkModulus]; }
  static double density(const MediumCell& m) { return m.p[kDensity]; }
};

class AcousticsSystem final : public SystemModel {
 public:
  int dim() const override { return 2; }
  std::string name() const override { return "acoustics"; }
  std::vector<std::string> component_names() const override { return {"p", "u"}; }

  Mat coeff_matrix(const MediumCell& m) const override;
  Vec source(const Vec& u, const MediumCell& m) const override;
  EigenDecomposition eigen(const Mat& a) const override;
};

std::shared_ptr<const SystemModel> acoustics_model();

// Samples K and rho at cell centers; ghosts copy the adjacent interior cell.
MediumField sample_acoustics_medium(const Grid& grid,
                                    const std::function<double(double)>& bulk_modulus,
                                    const std::function<double(double)>& density);

// Pressure reflection/transmission coefficients of a plane interface,
// Z_i = sqrt(K_i * rho_i): R = (Z2 - Z1)/(Z2 + Z1), T = 2 Z2/(Z1 + Z2).
struct InterfaceCoefficients {
  double reflection;
  double transmission;
};

InterfaceCoefficients acoustic_interface_coefficients(double k1, double rho1,
                                                      double k2, double rho2);

}  // namespace wbfv
