#pragma once

// Randomized self-checks of the structural invariants the schemes rely on:
// eigendecomposition residuals, the Roe property of the augmented flux, the
// spectrum relation between base and augmented systems, the fluctuation sum
// identity, exact preservation of seeded discrete equilibria, and agreement
// of the two balanced formulations.  Deterministic (fixed RNG seed).

#include <string>
#include <vector>

namespace wbfv {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst observed residual / drift
  double threshold = 0.0;  // bound it is held against
  std::string detail;
};

std::vector<PropertyResult> run_property_suites();

}  // namespace wbfv
