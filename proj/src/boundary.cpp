#include "wbfv/boundary.hpp"

#include <cmath>

#include "wbfv/source_geometry.hpp"

namespace wbfv {

Vec ghost_values(const Vec& u_adj, const std::vector<BcRule>& rules,
                 const SystemModel& sys, const MediumCell& medium_ghost,
                 const MediumCell& medium_adj, double dx, bool left) {
  const int n = u_adj.size();
  if (static_cast<int>(rules.size()) != n)
    throw ConfigError("boundary spec: one rule per component required");

  Vec u_ghost = u_adj;  // extrapolation baseline
  bool has_equilibrium = false;
  for (int m = 0; m < n; ++m) {
    if (rules[m].kind == BcKind::kDirichlet)
      u_ghost[m] = 2.0 * rules[m].value - u_adj[m];
    else if (rules[m].kind == BcKind::kEquilibrium)
      has_equilibrium = true;
  }

  if (has_equilibrium) {
    // The boundary-interface average uses the ghost medium, which copies the
    // adjacent cell, so A_tilde is just the adjacent coefficient matrix.
    const Mat a_tilde = sys.coeff_matrix(medium_adj);
    const Vec s_adj = sys.source(u_adj, medium_adj);
    for (int iter = 0; iter < 50; ++iter) {
      const Vec s_ghost = sys.source(u_ghost, medium_ghost);
      const Vec jump = left
          ? discrete_equilibrium_jump(a_tilde, s_ghost, s_adj, dx)
          : discrete_equilibrium_jump(a_tilde, s_adj, s_ghost, dx);
      double change = 0.0;
      for (int m = 0; m < n; ++m) {
        if (rules[m].kind != BcKind::kEquilibrium) continue;
        const double v = left ? u_adj[m] - jump[m] : u_adj[m] + jump[m];
        change = std::max(change, std::abs(v - u_ghost[m]) / (1.0 + std::abs(v)));
        u_ghost[m] = v;
      }
      if (change <= 1e-15) break;
    }
  }

  return u_ghost;
}

void apply_boundaries(FieldState& state, const BoundarySpec& spec,
                      const SystemModel& sys, const MediumField& medium) {
  const int nc = state.grid().n_cells;
  const double dx = state.grid().dx;
  state.set(0, ghost_values(state.get(1), spec.left, sys, medium[0], medium[1], dx, true));
  state.set(nc + 1, ghost_values(state.get(nc), spec.right, sys, medium[nc + 1], medium[nc], dx, false));
}

}  // namespace wbfv
