#pragma once

// Discrete steady states: cell values chosen so that every interface jump
// cancels the discretized source exactly.  A well-balanced sweep leaves such
// a state bit-identical, which is what the balance tests check.

#include "wbfv/cases.hpp"
#include "wbfv/runner.hpp"

namespace wbfv {

// Extends an equilibrium across one interface.  forward = true returns the
// right neighbour of u, forward = false the left one.  The source may depend
// on the unknown side, so the jump relation is resolved by a short
// fixed-point iteration.
Vec extend_equilibrium(const SystemModel& sys, const Vec& u, const MediumCell& m_here,
                       const MediumCell& m_next, double dx, bool forward);

struct SeededEquilibrium {
  CaseProblem problem;
  FieldState state;         // interior + ghosts hold a discrete equilibrium
  BoundarySpec boundaries;  // Dirichlet targets re-pinned to the seeded state
};

// Builds a discrete equilibrium for a case on the given grid, anchored at the
// case's initial value in the first cell and propagated cell by cell through
// the jump relation.  Dirichlet boundary targets are re-derived from the
// seeded state so that it is an exact fixed point of the balanced schemes.
SeededEquilibrium seed_case_equilibrium(const CaseSpec& spec, double dx,
                                        double eps_safety = 0.0);

}  // namespace wbfv
