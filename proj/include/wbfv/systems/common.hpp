#pragma once

#include "wbfv/linalg.hpp"

namespace wbfv {

// Closed-form eigendecomposition of an antidiagonal 2x2 matrix
// [[0, a01], [a10, 0]] with a01, a10 > 0 -- the shared structure of the
// acoustics and hyperbolic heat coefficient matrices and of their arithmetic
// interface averages.  lambda = -/+ sqrt(a01*a10), eigenvectors
// [-/+ w, 1] with w = sqrt(a01/a10).
EigenDecomposition eigen_antidiagonal(double a01, double a10);

}  // namespace wbfv
