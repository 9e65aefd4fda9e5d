#pragma once

// Deliberately not-well-balanced baseline: homogeneous Roe fluctuations plus
// a centered explicit source update dt * S(U_i).  Shares the fluctuation
// sweep so that with S == 0 it is bit-identical to the augmented scheme.

#include "wbfv/fluctuation_solver.hpp"

namespace wbfv {

FluctuationScheme make_unbalanced_scheme(std::shared_ptr<const SystemModel> sys,
                                         Grid grid, MediumField medium,
                                         BoundarySpec bc, double cfl);

}  // namespace wbfv
