#include "wbfv/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include "wbfv/fluctuation_solver.hpp"
#include "wbfv/flux_solver.hpp"
#include "wbfv/systems/acoustics.hpp"
#include "wbfv/systems/heat.hpp"

namespace wbfv {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kAugmentedFluctuation: return "augmented-fluctuation";
    case Scheme::kAugmentedFlux: return "augmented-flux";
    case Scheme::kUnbalanced: return "unbalanced";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "augmented-fluctuation") return Scheme::kAugmentedFluctuation;
  if (name == "augmented-flux") return Scheme::kAugmentedFlux;
  if (name == "unbalanced") return Scheme::kUnbalanced;
  throw ConfigError("unknown scheme: " + name);
}

namespace {

int resolve_cells(const CaseSpec& spec, const RunConfig& cfg) {
  if (cfg.cells > 0 && cfg.dx > 0.0)
    throw ConfigError("specify either dx or cells, not both");
  if (cfg.cells > 0) return cfg.cells;
  if (!(cfg.dx > 0.0)) throw ConfigError("run config needs dx or cells");
  const double exact = (spec.b - spec.a) / cfg.dx;
  const int n = static_cast<int>(std::lround(exact));
  if (n < 2 || std::abs(exact - n) > 1e-6 * exact)
    throw ConfigError("dx does not evenly divide the domain of case " + spec.id);
  return n;
}

Termination resolve_termination(const CaseSpec& spec, const RunConfig& cfg) {
  const Termination& t = cfg.termination;
  const int active = (t.max_steps > 0) + (t.t_end > 0.0) + (t.residual > 0.0);
  if (active > 1) throw ConfigError("exactly one termination rule may be set");
  if (active == 1) return t;
  Termination d;
  d.max_steps = spec.default_steps;
  d.t_end = spec.default_t_end;
  return d;
}

}  // namespace

CaseProblem build_case_problem(const CaseSpec& spec, double dx, double eps_safety,
                               bool need_augmented) {
  CaseProblem p;
  const double exact = (spec.b - spec.a) / dx;
  const int n = static_cast<int>(std::lround(exact));
  if (!(dx > 0.0) || n < 2 || std::abs(exact - n) > 1e-6 * exact)
    throw ConfigError("dx does not evenly divide the domain of case " + spec.id);
  p.grid = build_grid(spec.a, spec.b, n);
  if (spec.system_kind == "heat") {
    const double safety = eps_safety > 0.0 ? eps_safety : spec.eps_safety;
    const double eps = epsilon_for(p.grid.dx, safety);
    p.medium = sample_heat_medium(p.grid, spec.conductivity, spec.r, eps, spec.phi);
    p.system = heat_model();
    if (need_augmented) p.augmented = heat_model_augmented(spec.r, eps);
  } else if (spec.system_kind == "acoustics") {
    p.medium = sample_acoustics_medium(p.grid, spec.bulk_modulus, spec.density);
    p.system = acoustics_model();
    if (need_augmented)
      p.augmented = std::make_shared<const FullAugmentation>(acoustics_model());
  } else {
    throw ConfigError("unknown system kind: " + spec.system_kind);
  }
  return p;
}

std::function<Vec(double)> case_reference(const CaseSpec& spec, double dx, double t) {
  switch (spec.reference_kind) {
    case ReferenceKind::kExact:
      if (spec.exact_reference) {
        AnalyticalSolution sol = spec.exact_reference(dx);
        return [sol, t](double x) { return sol.eval(x, t); };
      }
      break;
    case ReferenceKind::kEquilibrium:
      if (spec.equilibrium_reference) {
        AnalyticalSolution sol = spec.equilibrium_reference(dx);
        return [sol, t](double x) { return sol.eval(x, t); };
      }
      break;
    case ReferenceKind::kFineGridSelf:
      break;
  }
  return nullptr;
}

RunResult run_case(const CaseSpec& spec, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const bool flux_form = cfg.scheme == Scheme::kAugmentedFlux;
  const int cells = resolve_cells(spec, cfg);
  const CaseProblem p =
      build_case_problem(spec, (spec.b - spec.a) / cells, cfg.eps_safety, flux_form);
  const double cfl = cfg.cfl > 0.0 ? cfg.cfl : spec.default_cfl;
  const Termination term = resolve_termination(spec, cfg);
  if (term.max_steps <= 0 && term.t_end <= 0.0 && term.residual <= 0.0)
    throw ConfigError("case " + spec.id + " has no termination rule");

  FieldState state(p.grid, p.system->dim());
  for (int i = 1; i <= p.grid.n_cells; ++i) state.set(i, spec.initial(p.grid.center(i)));

  const BoundarySpec bc = case_boundaries(spec, p.grid.dx);
  std::unique_ptr<FluctuationScheme> fluct;
  std::unique_ptr<FluxScheme> flux;
  if (flux_form) {
    flux = std::make_unique<FluxScheme>(p.augmented, p.system, p.grid, p.medium, bc, cfl);
    state = flux->augment_state(state);
  } else {
    const SourceMode mode = cfg.scheme == Scheme::kUnbalanced ? SourceMode::kUnbalanced
                                                              : SourceMode::kAugmented;
    fluct = std::make_unique<FluctuationScheme>(p.system, p.grid, p.medium, bc, cfl, mode);
  }

  StepStats stats;
  const bool want_stats = cfg.collect_stats;
  const long step_cap = term.max_steps > 0 ? term.max_steps : 50'000'000L;
  const int n_interior = p.grid.n_cells;
  std::vector<double> prev;
  if (term.residual > 0.0) prev.resize((n_interior + 2) * state.n_comp());

  while (true) {
    if (term.max_steps > 0 && state.step >= term.max_steps) break;
    if (term.t_end > 0.0 && state.t >= term.t_end * (1.0 - 1e-14)) break;
    if (state.step >= step_cap)
      throw NumericalError("case " + spec.id + ": step cap reached without meeting termination");

    double cap = 0.0;
    if (term.t_end > 0.0) cap = term.t_end - state.t;

    if (term.residual > 0.0)
      for (int i = 1; i <= n_interior; ++i)
        for (int m = 0; m < state.n_comp(); ++m)
          prev[i * state.n_comp() + m] = state.cell(i)[m];

    if (flux_form)
      flux->step(state, want_stats ? &stats : nullptr, cap);
    else
      fluct->step(state, want_stats ? &stats : nullptr, cap);

    if ((state.step & 0xFF) == 0 && !state.all_finite())
      throw NumericalError("case " + spec.id + ": non-finite state at step " +
                           std::to_string(state.step) + ", t = " + std::to_string(state.t));

    if (term.residual > 0.0) {
      double change = 0.0;
      for (int i = 1; i <= n_interior; ++i)
        for (int m = 0; m < state.n_comp(); ++m)
          change = std::max(change,
                            std::abs(state.cell(i)[m] - prev[i * state.n_comp() + m]));
      if (change / stats.dt <= term.residual) break;
    }
  }

  if (!state.all_finite())
    throw NumericalError("case " + spec.id + ": non-finite state at step " +
                         std::to_string(state.step));

  RunResult result{flux_form ? flux->project_state(state) : state, {}};
  result.state.t = state.t;
  result.state.step = state.step;

  ErrorReport& rep = result.report;
  rep.components = p.system->component_names();
  rep.dx = p.grid.dx;
  rep.steps = state.step;
  rep.t_final = state.t;
  rep.fluctuation_residual = stats.fluctuation_residual;

  std::function<Vec(double)> ref = cfg.external_reference;
  if (!ref) ref = case_reference(spec, p.grid.dx, state.t);
  if (ref) {
    rep.has_reference = true;
    rep.linf = linf_norm(result.state, ref);
    rep.l1 = l1_norm(result.state, ref);
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!cfg.out_dir.empty()) write_run_output(spec, cfg, result, ref);
  return result;
}

std::vector<double> linf_norm(const FieldState& state, const std::function<Vec(double)>& ref) {
  const int n = state.n_comp();
  std::vector<double> norms(n, 0.0);
  for (int i = 1; i <= state.grid().n_cells; ++i) {
    const Vec r = ref(state.grid().center(i));
    for (int m = 0; m < n; ++m)
      norms[m] = std::max(norms[m], std::abs(state.cell(i)[m] - r[m]));
  }
  return norms;
}

std::vector<double> l1_norm(const FieldState& state, const std::function<Vec(double)>& ref) {
  const int n = state.n_comp();
  std::vector<double> norms(n, 0.0);
  for (int i = 1; i <= state.grid().n_cells; ++i) {
    const Vec r = ref(state.grid().center(i));
    for (int m = 0; m < n; ++m) norms[m] += std::abs(state.cell(i)[m] - r[m]);
  }
  for (int m = 0; m < n; ++m) norms[m] *= state.grid().dx;
  return norms;
}

FieldState restrict_state(const FieldState& fine, const Grid& coarse) {
  const Grid& fg = fine.grid();
  if (std::abs(fg.a - coarse.a) > 1e-12 || std::abs(fg.b - coarse.b) > 1e-12)
    throw ConfigError("restrict_state: domains differ");
  const double ratio_exact = coarse.dx / fg.dx;
  const int ratio = static_cast<int>(std::lround(ratio_exact));
  if (ratio < 1 || std::abs(ratio_exact - ratio) > 1e-9)
    throw ConfigError("restrict_state: spacing ratio is not an integer");
  FieldState out(coarse, fine.n_comp());
  out.t = fine.t;
  for (int i = 1; i <= coarse.n_cells; ++i) {
    Vec avg(fine.n_comp());
    for (int j = 0; j < ratio; ++j) {
      const int fi = (i - 1) * ratio + j + 1;
      for (int m = 0; m < fine.n_comp(); ++m) avg[m] += fine.cell(fi)[m];
    }
    avg *= 1.0 / ratio;
    out.set(i, avg);
  }
  return out;
}

std::vector<ConvergenceRow> convergence_study(const CaseSpec& spec, Scheme scheme,
                                              const std::vector<double>& dxs,
                                              RunConfig base) {
  if (dxs.size() < 2) throw ConfigError("convergence study needs at least 2 grids");

  // Self-referenced cases get one fine run, averaged onto each study grid.
  std::optional<FieldState> fine;
  if (spec.reference_kind == ReferenceKind::kFineGridSelf) {
    RunConfig ref_cfg = base;
    ref_cfg.scheme = scheme;
    ref_cfg.dx = spec.reference_dx;
    ref_cfg.cells = 0;
    ref_cfg.out_dir.clear();
    ref_cfg.external_reference = nullptr;
    fine = run_case(spec, ref_cfg).state;
  }

  std::vector<ConvergenceRow> rows;
  for (double dx : dxs) {
    RunConfig cfg = base;
    cfg.scheme = scheme;
    cfg.dx = dx;
    cfg.cells = 0;
    cfg.out_dir.clear();
    cfg.external_reference = nullptr;
    const RunResult r = run_case(spec, cfg);

    // Convergence is always measured against the exact (or fine-grid)
    // solution, not the grid-dependent equilibrium evaluator.
    std::function<Vec(double)> ref;
    if (fine) {
      const Grid coarse = r.state.grid();
      const FieldState restricted = restrict_state(*fine, coarse);
      ref = [restricted](double x) {
        const Grid& g = restricted.grid();
        int i = static_cast<int>(std::floor((x - g.a) / g.dx)) + 1;
        i = std::max(1, std::min(g.n_cells, i));
        return restricted.get(i);
      };
    } else if (spec.exact_reference) {
      const AnalyticalSolution sol = spec.exact_reference(r.report.dx);
      const double t = r.report.t_final;
      ref = [sol, t](double x) { return sol.eval(x, t); };
    } else {
      ref = case_reference(spec, r.report.dx, r.report.t_final);
    }
    if (!ref) throw ConfigError("convergence study: case has no reference evaluator");

    ConvergenceRow row;
    row.dx = r.report.dx;
    row.linf = linf_norm(r.state, ref);
    row.order.assign(row.linf.size(), std::nan(""));
    if (!rows.empty()) {
      const ConvergenceRow& prevr = rows.back();
      for (size_t m = 0; m < row.linf.size(); ++m)
        if (prevr.linf[m] > 0.0 && row.linf[m] > 0.0)
          row.order[m] = std::log(prevr.linf[m] / row.linf[m]) / std::log(prevr.dx / row.dx);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_run_output(const CaseSpec& spec, const RunConfig& cfg, const RunResult& result,
                      const std::function<Vec(double)>& ref) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const FieldState& s = result.state;
  const ErrorReport& rep = result.report;
  const int n = s.n_comp();

  {
    std::ofstream csv(fs::path(cfg.out_dir) / "solution.csv");
    if (!csv) throw ConfigError("cannot write output to " + cfg.out_dir);
    csv << "x";
    for (const auto& c : rep.components) csv << "," << c;
    if (ref) {
      for (const auto& c : rep.components) csv << ",ref_" << c;
      for (const auto& c : rep.components) csv << ",abs_err_" << c;
    }
    csv << "\n";
    char buf[64];
    for (int i = 1; i <= s.grid().n_cells; ++i) {
      const double x = s.grid().center(i);
      std::snprintf(buf, sizeof buf, "%.17g", x);
      csv << buf;
      for (int m = 0; m < n; ++m) {
        std::snprintf(buf, sizeof buf, "%.17g", s.cell(i)[m]);
        csv << "," << buf;
      }
      if (ref) {
        const Vec r = ref(x);
        for (int m = 0; m < n; ++m) {
          std::snprintf(buf, sizeof buf, "%.17g", r[m]);
          csv << "," << buf;
        }
        for (int m = 0; m < n; ++m) {
          std::snprintf(buf, sizeof buf, "%.17g", std::abs(s.cell(i)[m] - r[m]));
          csv << "," << buf;
        }
      }
      csv << "\n";
    }
  }

  {
    std::ofstream rpt(fs::path(cfg.out_dir) / "report.txt");
    rpt << "case: " << spec.id << "\n"
        << "scheme: " << scheme_name(cfg.scheme) << "\n"
        << "dx: " << rep.dx << "\n"
        << "cells: " << s.grid().n_cells << "\n"
        << "steps: " << rep.steps << "\n"
        << "t_final: " << rep.t_final << "\n"
        << "wall_seconds: " << rep.wall_seconds << "\n"
        << "max_fluctuation_identity_residual: " << rep.fluctuation_residual << "\n";
    if (rep.has_reference) {
      for (size_t m = 0; m < rep.components.size(); ++m) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e", rep.linf[m]);
        rpt << "linf_" << rep.components[m] << ": " << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.6e", rep.l1[m]);
        rpt << "l1_" << rep.components[m] << ": " << buf << "\n";
      }
    } else {
      rpt << "reference: none (self-referenced case)\n";
    }
  }
}

}  // namespace wbfv
