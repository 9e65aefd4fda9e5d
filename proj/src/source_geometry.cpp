#include "wbfv/source_geometry.hpp"

namespace wbfv {

Vec source_cell_average(const SystemModel& sys, const Vec& u, const MediumCell& m) {
  return sys.source(u, m);
}

Vec delta_v(const Vec& s_i, const Vec& s_ip1, double dx) {
  return 0.5 * dx * (s_i + s_ip1);
}

Vec discrete_equilibrium_jump(const Mat& a_tilde, const Vec& s_i, const Vec& s_ip1, double dx) {
  return solve(a_tilde, delta_v(s_i, s_ip1, dx));
}

}  // namespace wbfv
