#pragma once

// Run configuration, execution loop, error norms, convergence studies and
// file output.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wbfv/cases.hpp"
#include "wbfv/grid.hpp"

namespace wbfv {

enum class Scheme { kAugmentedFluctuation, kAugmentedFlux, kUnbalanced };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

// Exactly one of max_steps / t_end / residual may be active; all zero means
// "use the case default".
struct Termination {
  long max_steps = 0;
  double t_end = 0.0;
  double residual = 0.0;  // stop when max |dU| / dt drops below this
};

struct RunConfig {
  Scheme scheme = Scheme::kAugmentedFluctuation;
  double dx = 0.0;  // one of dx / cells
  int cells = 0;
  double cfl = 0.0;         // 0 -> case default
  Termination termination;  // zeroed -> case default
  double eps_safety = 0.0;  // 0 -> case default
  std::string out_dir;      // empty -> no files written
  bool collect_stats = true;
  // Overrides the case reference (used for restricted fine-grid references).
  std::function<Vec(double)> external_reference;
};

struct ErrorReport {
  std::vector<std::string> components;
  std::vector<double> linf;
  std::vector<double> l1;
  bool has_reference = false;
  double dx = 0.0;
  long steps = 0;
  double t_final = 0.0;
  double wall_seconds = 0.0;
  double fluctuation_residual = 0.0;
};

struct RunResult {
  FieldState state;
  ErrorReport report;
};

RunResult run_case(const CaseSpec& spec, const RunConfig& cfg);

// Grid + sampled medium + system models for a case at a given spacing.  The
// relaxation parameter of heat cases follows eps_safety (0 -> case default).
struct CaseProblem {
  Grid grid;
  MediumField medium;
  std::shared_ptr<const SystemModel> system;
  std::shared_ptr<const AugmentedSystem> augmented;  // filled on request
};

CaseProblem build_case_problem(const CaseSpec& spec, double dx, double eps_safety = 0.0,
                               bool need_augmented = false);

// Per-component norms of the deviation from a reference sampled at interior
// cell centers.
std::vector<double> linf_norm(const FieldState& state, const std::function<Vec(double)>& ref);
std::vector<double> l1_norm(const FieldState& state, const std::function<Vec(double)>& ref);

// The case's reference evaluator at a given grid spacing and output time, or
// nullptr for self-referenced cases.
std::function<Vec(double)> case_reference(const CaseSpec& spec, double dx, double t);

// Averages a fine solution onto a coarser grid covering the same domain
// (spacing ratio must be an integer).
FieldState restrict_state(const FieldState& fine, const Grid& coarse);

struct ConvergenceRow {
  double dx = 0.0;
  std::vector<double> linf;
  std::vector<double> order;  // vs previous row; NaN on the first row
};

std::vector<ConvergenceRow> convergence_study(const CaseSpec& spec, Scheme scheme,
                                              const std::vector<double>& dxs,
                                              RunConfig base = {});

void write_run_output(const CaseSpec& spec, const RunConfig& cfg, const RunResult& result,
                      const std::function<Vec(double)>& ref);

}  // namespace wbfv
