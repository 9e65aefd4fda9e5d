#pragma once

#include "wbfv/grid.hpp"
#include "wbfv/system.hpp"

namespace wbfv {

// Fills both ghost cells.  Dirichlet reflects about the interface target
// (ghost = 2*target - interior) so the interface-averaged value matches the
// prescribed boundary value exactly; Extrapolate copies; Equilibrium
// continues the discrete steady-state jump relation of the adjacent boundary
// interface into the ghost (solved by a short fixed-point iteration because
// the source may depend on the ghost state itself).  Idempotent.
void apply_boundaries(FieldState& state, const BoundarySpec& spec,
                      const SystemModel& sys, const MediumField& medium);

// Ghost value for one side given the adjacent interior cell; the building
// block of apply_boundaries, also used by the flux-form stepper which stores
// augmented states.
Vec ghost_values(const Vec& u_adj, const std::vector<BcRule>& rules,
                 const SystemModel& sys, const MediumCell& medium_ghost,
                 const MediumCell& medium_adj, double dx, bool left);

}  // namespace wbfv
