#include "wbfv/unbalanced_solver.hpp"

namespace wbfv {

FluctuationScheme make_unbalanced_scheme(std::shared_ptr<const SystemModel> sys,
                                         Grid grid, MediumField medium,
                                         BoundarySpec bc, double cfl) {
  return FluctuationScheme(std::move(sys), grid, std::move(medium), std::move(bc),
                           cfl, SourceMode::kUnbalanced);
}

}  // namespace wbfv
