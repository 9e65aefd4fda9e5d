#pragma once

// Uniform 1D mesh with one ghost cell per side, cell-averaged field storage
// and the CFL time-step rule.

#include <vector>

#include "wbfv/linalg.hpp"

namespace wbfv {

struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_cells = 0;
  double dx = 0.0;

  // Interior cells are indexed 1..n_cells; 0 and n_cells+1 are ghosts.
  double center(int i) const { return a + (i - 0.5) * dx; }
  // Interface i sits between cells i and i+1, i = 0..n_cells.
  double interface(int i) const { return a + i * dx; }
};

Grid build_grid(double a, double b, int n_cells);

double cfl_dt(const Grid& grid, double max_abs_lambda, double cfl);

// Cell averages of the n_comp solution components over interior + ghost
// cells, stored contiguously per cell.
class FieldState {
 public:
  FieldState() = default;
  FieldState(const Grid& grid, int n_comp)
      : grid_(grid), n_comp_(n_comp), u_((grid.n_cells + 2) * n_comp, 0.0) {}

  const Grid& grid() const { return grid_; }
  int n_comp() const { return n_comp_; }
  double t = 0.0;
  long step = 0;

  double* cell(int i) { return u_.data() + i * n_comp_; }
  const double* cell(int i) const { return u_.data() + i * n_comp_; }

  Vec get(int i) const {
    Vec v(n_comp_);
    const double* c = cell(i);
    for (int m = 0; m < n_comp_; ++m) v[m] = c[m];
    return v;
  }
  void set(int i, const Vec& v) {
    double* c = cell(i);
    for (int m = 0; m < n_comp_; ++m) c[m] = v[m];
  }

  bool all_finite() const;

 private:
  Grid grid_;
  int n_comp_ = 0;
  std::vector<double> u_;
};

// Per-cell medium parameters sampled at cell centers (ghosts copy their
// adjacent interior cell).  The meaning of the slots is fixed by the system
// model that samples them.
struct MediumCell {
  std::array<double, 4> p{};
};

using MediumField = std::vector<MediumCell>;  // size n_cells + 2

enum class BcKind { kDirichlet, kExtrapolate, kEquilibrium };

struct BcRule {
  BcKind kind = BcKind::kExtrapolate;
  double value = 0.0;  // interface target for Dirichlet
};

// One rule per (side, component).  kEquilibrium continues the discrete
// steady-state jump relation into the ghost cell; it is what lets Dirichlet
// data on the complementary component coexist with a machine-accurate
// equilibrium.
struct BoundarySpec {
  std::vector<BcRule> left;
  std::vector<BcRule> right;
};

}  // namespace wbfv
