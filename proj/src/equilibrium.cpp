#include "wbfv/equilibrium.hpp"

#include <cmath>

#include "wbfv/source_geometry.hpp"

namespace wbfv {

Vec extend_equilibrium(const SystemModel& sys, const Vec& u, const MediumCell& m_here,
                       const MediumCell& m_next, double dx, bool forward) {
  const Mat a_tilde = 0.5 * (sys.coeff_matrix(m_here) + sys.coeff_matrix(m_next));
  const Vec s_here = source_cell_average(sys, u, m_here);
  Vec next = u;
  for (int it = 0; it < 50; ++it) {
    const Vec s_next = source_cell_average(sys, next, m_next);
    const Vec jump = forward ? discrete_equilibrium_jump(a_tilde, s_here, s_next, dx)
                             : discrete_equilibrium_jump(a_tilde, s_next, s_here, dx);
    Vec updated = u;
    if (forward)
      updated += jump;
    else
      updated -= jump;
    const double change = (updated - next).inf_norm();
    next = updated;
    if (change <= 1e-15 * std::max(1.0, next.inf_norm())) break;
  }
  return next;
}

SeededEquilibrium seed_case_equilibrium(const CaseSpec& spec, double dx,
                                        double eps_safety) {
  SeededEquilibrium out;
  out.problem = build_case_problem(spec, dx, eps_safety);
  const Grid& grid = out.problem.grid;
  const SystemModel& sys = *out.problem.system;
  const MediumField& med = out.problem.medium;

  out.state = FieldState(grid, sys.dim());
  out.state.set(1, spec.initial(grid.center(1)));
  for (int i = 1; i < grid.n_cells; ++i)
    out.state.set(i + 1, extend_equilibrium(sys, out.state.get(i), med[i], med[i + 1],
                                            grid.dx, /*forward=*/true));
  const int n = grid.n_cells;
  out.state.set(0, extend_equilibrium(sys, out.state.get(1), med[1], med[0], grid.dx,
                                      /*forward=*/false));
  out.state.set(n + 1, extend_equilibrium(sys, out.state.get(n), med[n], med[n + 1],
                                          grid.dx, /*forward=*/true));

  // Re-pin Dirichlet targets to the interface averages of the seeded state so
  // the boundary fill reproduces exactly the ghosts built above.
  out.boundaries = spec.boundaries;
  for (int m = 0; m < sys.dim(); ++m) {
    if (m < static_cast<int>(out.boundaries.left.size()) &&
        out.boundaries.left[m].kind == BcKind::kDirichlet)
      out.boundaries.left[m].value = 0.5 * (out.state.cell(0)[m] + out.state.cell(1)[m]);
    if (m < static_cast<int>(out.boundaries.right.size()) &&
        out.boundaries.right[m].kind == BcKind::kDirichlet)
      out.boundaries.right[m].value =
          0.5 * (out.state.cell(n)[m] + out.state.cell(n + 1)[m]);
  }
  return out;
}

}  // namespace wbfv
