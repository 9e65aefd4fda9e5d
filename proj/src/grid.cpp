#include "wbfv/grid.hpp"

#include <cmath>

namespace wbfv {

Grid build_grid(double a, double b, int n_cells) {
  if (!(b > a)) throw ConfigError("build_grid: domain end must exceed start");
  if (n_cells < 2) throw ConfigError("build_grid: need at least 2 cells");
  Grid g;
  g.a = a;
  g.b = b;
  g.n_cells = n_cells;
  g.dx = (b - a) / n_cells;
  return g;
}

double cfl_dt(const Grid& grid, double max_abs_lambda, double cfl) {
  if (!(max_abs_lambda > 0.0)) throw ConfigError("cfl_dt: zero wave speed (degenerate system)");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl_dt: cfl must be in (0, 1]");
  return cfl * grid.dx / max_abs_lambda;
}

bool FieldState::all_finite() const {
  for (double x : u_)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace wbfv
