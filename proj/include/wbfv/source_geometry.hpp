#pragma once

// Geometric reinterpretation of the source term: interface source integrals
// deltaV and the discrete-equilibrium jump relation they induce.

#include "wbfv/grid.hpp"
#include "wbfv/linalg.hpp"
#include "wbfv/system.hpp"

namespace wbfv {

// Cell average of the source; exact for sources affine in x and U since the
// medium is sampled at the cell center.
Vec source_cell_average(const SystemModel& sys, const Vec& u, const MediumCell& m);

// Interface source integral: deltaV = (S_i + S_{i+1}) * dx / 2.
Vec delta_v(const Vec& s_i, const Vec& s_ip1, double dx);

// Jump deltaU = A_tilde^{-1} * deltaV that an exact discrete equilibrium
// exhibits across an interface.
Vec discrete_equilibrium_jump(const Mat& a_tilde, const Vec& s_i, const Vec& s_ip1, double dx);

}  // namespace wbfv
