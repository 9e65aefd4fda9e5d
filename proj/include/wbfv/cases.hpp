#pragma once

// Benchmark case registry: each id maps to a fully determined configuration
// (domain, medium profiles, initial and boundary data, run defaults and the
// reference solution it is judged against).

#include <functional>
#include <string>
#include <vector>

#include "wbfv/grid.hpp"
#include "wbfv/systems/heat.hpp"

namespace wbfv {

enum class ReferenceKind { kExact, kEquilibrium, kFineGridSelf };

struct CaseSpec {
  std::string id;
  std::string description;
  std::string section;       // where the setup comes from in the write-up
  std::string system_kind;   // "acoustics" | "heat"

  double a = 0.0;
  double b = 1.0;

  // Heat medium (ignored for acoustics).  eps is resolved per grid via
  // epsilon_for(dx, eps_safety).
  std::function<double(double)> conductivity;
  double r = 1.0;
  std::function<double(double)> phi;
  // Per-case relaxation safety factor.  Has to keep dt / eps bounded:
  // explicit integration of the relaxation term is unstable once
  // cfl * dx / sqrt(k_max * r * eps) exceeds 2, which bounds the factor from
  // below at the coarsest grid of each case.
  double eps_safety = 0.5;

  // Acoustics medium (ignored for heat).
  std::function<double(double)> bulk_modulus;
  std::function<double(double)> density;

  std::function<Vec(double)> initial;  // pointwise at cell centers, t = 0
  BoundarySpec boundaries;
  // Optional grid-dependent boundary override.  Dirichlet targets prescribe
  // the value at the boundary interface; with reflection ghosts that is the
  // mean of the adjacent cell centers, which for curved reference profiles
  // differs from the pointwise boundary value by O(dx^2).  Cases whose
  // reference is curved at a Dirichlet boundary pin the interface value of
  // the reference profile here.
  std::function<BoundarySpec(double dx)> boundaries_for;

  double default_cfl = 0.8;
  long default_steps = 0;      // steady cases: fixed step count
  double default_t_end = 0.0;  // transient cases

  ReferenceKind reference_kind = ReferenceKind::kExact;
  // Analytical references where available; the equilibrium variant takes the
  // grid spacing (transition-layer thickness) as input.
  std::function<AnalyticalSolution(double dx)> exact_reference;
  std::function<AnalyticalSolution(double dx)> equilibrium_reference;
  double reference_dx = 0.0;   // grid of the self-computed reference run
};

const std::vector<CaseSpec>& case_registry();
const CaseSpec& find_case(const std::string& id);

// Boundary conditions for a given grid spacing (spec.boundaries_for when
// present, otherwise the static spec.boundaries).
BoundarySpec case_boundaries(const CaseSpec& spec, double dx);

}  // namespace wbfv
