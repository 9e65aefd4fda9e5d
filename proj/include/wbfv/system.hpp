#pragma once

// Abstract system interfaces.  A SystemModel supplies the coefficient matrix,
// the source vector and a closed-form eigendecomposition of (interface
// averages of) its coefficient matrix.  An AugmentedSystem additionally
// carries spatially varying coefficients as extra conserved components so the
// scheme can be written in flux form.

#include <memory>
#include <string>
#include <vector>

#include "wbfv/grid.hpp"
#include "wbfv/linalg.hpp"

namespace wbfv {

class SystemModel {
 public:
  virtual ~SystemModel() = default;

  virtual int dim() const = 0;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> component_names() const = 0;

  // Coefficient matrix of the cell's medium sample.
  virtual Mat coeff_matrix(const MediumCell& m) const = 0;

  // Source vector S(U) with cell-centered medium values.
  virtual Vec source(const Vec& u, const MediumCell& m) const = 0;

  // Closed-form eigendecomposition, valid for any matrix of this system's
  // structural family (in particular arithmetic interface averages).
  virtual EigenDecomposition eigen(const Mat& a) const = 0;
};

class AugmentedSystem {
 public:
  virtual ~AugmentedSystem() = default;

  virtual int dim() const = 0;       // physical + appended coefficients
  virtual int phys_dim() const = 0;  // leading physical components

  // Appends the cell's varying coefficients to the physical state.
  virtual Vec augment(const Vec& u, const MediumCell& m) const = 0;

  Vec project(const Vec& ubar) const {
    Vec u(phys_dim());
    for (int m = 0; m < phys_dim(); ++m) u[m] = ubar[m];
    return u;
  }

  // Jacobian of the conservative flux, the nonconservative coefficient
  // matrix, and the flux itself.  flux_jacobian - nonconservative_matrix
  // embeds the physical coefficient matrix in the top-left block.
  virtual Mat flux_jacobian(const Vec& ubar) const = 0;
  virtual Mat nonconservative_matrix(const Vec& ubar) const = 0;
  virtual Vec flux(const Vec& ubar) const = 0;

  // Source with zero entries appended for the coefficient equations.
  virtual Vec source(const Vec& ubar, const MediumCell& m) const = 0;

  // Closed-form eigendecomposition of an (averaged) flux Jacobian.
  virtual EigenDecomposition eigen(const Mat& m_tilde) const = 0;
};

}  // namespace wbfv
