// Benchmark driver: run single cases, run convergence studies, list the case
// registry and execute the property suites.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure,
// 3 assertion-threshold failure (with --assert).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wbfv/properties.hpp"
#include "wbfv/runner.hpp"

namespace {

using namespace wbfv;

struct CliOptions {
  std::string config_path;
  std::string case_id;
  std::string scheme = "augmented-fluctuation";
  double dx = 0.0;
  int cells = 0;
  double cfl = 0.0;
  long steps = 0;
  double t_end = 0.0;
  double residual = 0.0;
  double eps_safety = 0.0;
  std::string out_dir;
  std::string assertions;
  std::string dx_list;  // convergence only
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: " + v);
  }
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: " + v);
  }
}

// Flat `key = value` file with [case] / [run] sections and # comments.
// Unknown keys or sections are errors.  Values parsed here only fill options
// the command line left at their defaults.
void apply_config_file(const std::string& path, CliOptions& opt,
                       const std::vector<std::string>& cli_set) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);

  const auto overridden = [&](const std::string& key) {
    return std::find(cli_set.begin(), cli_set.end(), key) != cli_set.end();
  };

  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "case" && section != "run")
        throw ConfigError(where + ": unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(where + ": expected key = value");

    if (section == "case") {
      if (key == "id") {
        if (!overridden("case")) opt.case_id = value;
      } else {
        throw ConfigError(where + ": unknown key '" + key + "' in [case]");
      }
    } else if (section == "run") {
      if (key == "scheme") {
        if (!overridden("scheme")) opt.scheme = value;
      } else if (key == "dx") {
        if (!overridden("dx")) opt.dx = parse_double(key, value);
      } else if (key == "cells") {
        if (!overridden("cells")) opt.cells = static_cast<int>(parse_long(key, value));
      } else if (key == "cfl") {
        if (!overridden("cfl")) opt.cfl = parse_double(key, value);
      } else if (key == "steps") {
        if (!overridden("steps")) opt.steps = parse_long(key, value);
      } else if (key == "t_end") {
        if (!overridden("t_end")) opt.t_end = parse_double(key, value);
      } else if (key == "residual") {
        if (!overridden("residual")) opt.residual = parse_double(key, value);
      } else if (key == "eps_safety") {
        if (!overridden("eps_safety")) opt.eps_safety = parse_double(key, value);
      } else if (key == "out") {
        if (!overridden("out")) opt.out_dir = value;
      } else {
        throw ConfigError(where + ": unknown key '" + key + "' in [run]");
      }
    } else {
      throw ConfigError(where + ": key outside of a [case] / [run] section");
    }
  }
}

RunConfig to_run_config(const CliOptions& opt) {
  RunConfig cfg;
  cfg.scheme = parse_scheme(opt.scheme);
  cfg.dx = opt.dx;
  cfg.cells = opt.cells;
  if (opt.cfl != 0.0 && !(opt.cfl > 0.0 && opt.cfl <= 1.0))
    throw ConfigError("cfl must lie in (0, 1]");
  cfg.cfl = opt.cfl;
  cfg.termination.max_steps = opt.steps;
  cfg.termination.t_end = opt.t_end;
  cfg.termination.residual = opt.residual;
  cfg.eps_safety = opt.eps_safety;
  cfg.out_dir = opt.out_dir;
  return cfg;
}

// Assertions: comma-separated `metric<=bound` with metric in
// {linf_<comp>, l1_<comp>}.  Returns the failures.
std::vector<std::string> check_assertions(const std::string& spec, const ErrorReport& rep) {
  std::vector<std::string> failures;
  std::stringstream ss(spec);
  std::string clause;
  while (std::getline(ss, clause, ',')) {
    clause = trim(clause);
    if (clause.empty()) continue;
    const auto op = clause.find("<=");
    if (op == std::string::npos)
      throw ConfigError("assertion '" + clause + "': expected metric<=bound");
    const std::string metric = trim(clause.substr(0, op));
    const double bound = parse_double(metric, trim(clause.substr(op + 2)));

    double value = std::nan("");
    for (size_t m = 0; m < rep.components.size(); ++m) {
      if (metric == "linf_" + rep.components[m] && rep.has_reference)
        value = rep.linf[m];
      if (metric == "l1_" + rep.components[m] && rep.has_reference)
        value = rep.l1[m];
    }
    if (std::isnan(value))
      throw ConfigError("assertion '" + clause + "': unknown metric " + metric);
    if (!(value <= bound)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%s = %.6e exceeds %.6e", metric.c_str(), value,
                    bound);
      failures.emplace_back(buf);
    }
  }
  return failures;
}

int cmd_run(const CliOptions& opt) {
  const CaseSpec& spec = find_case(opt.case_id);
  const RunConfig cfg = to_run_config(opt);
  const RunResult result = run_case(spec, cfg);
  const ErrorReport& rep = result.report;

  std::printf("case: %s\nscheme: %s\ndx: %g (%d cells)\nsteps: %ld\nt_final: %g\n",
              spec.id.c_str(), scheme_name(cfg.scheme).c_str(), rep.dx,
              result.state.grid().n_cells, rep.steps, rep.t_final);
  std::printf("fluctuation identity residual: %.3e\n", rep.fluctuation_residual);
  if (rep.has_reference) {
    for (size_t m = 0; m < rep.components.size(); ++m)
      std::printf("L_inf(%s) = %.6e   L1(%s) = %.6e\n", rep.components[m].c_str(),
                  rep.linf[m], rep.components[m].c_str(), rep.l1[m]);
  } else {
    std::printf("no analytical reference for this case (self-referenced)\n");
  }
  std::printf("wall time: %.3f s\n", rep.wall_seconds);
  if (!opt.out_dir.empty()) std::printf("output written to %s\n", opt.out_dir.c_str());

  if (!opt.assertions.empty()) {
    const std::vector<std::string> failures = check_assertions(opt.assertions, rep);
    for (const std::string& f : failures) std::fprintf(stderr, "ASSERT FAILED: %s\n", f.c_str());
    if (!failures.empty()) return 3;
    std::printf("assertions passed\n");
  }
  return 0;
}

int cmd_convergence(const CliOptions& opt) {
  const CaseSpec& spec = find_case(opt.case_id);
  std::vector<double> dxs;
  std::stringstream ss(opt.dx_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) dxs.push_back(parse_double("dx", tok));
  }
  RunConfig base = to_run_config(opt);
  base.dx = 0.0;
  base.out_dir.clear();
  const std::vector<ConvergenceRow> rows =
      convergence_study(spec, parse_scheme(opt.scheme), dxs, base);

  const std::vector<std::string> comps =
      build_case_problem(spec, dxs.front()).system->component_names();
  std::printf("case: %s, scheme: %s\n", spec.id.c_str(), opt.scheme.c_str());
  std::printf("%10s", "dx");
  for (const auto& c : comps) std::printf("  %12s  %8s", ("L_inf(" + c + ")").c_str(), "order");
  std::printf("\n");
  for (const ConvergenceRow& row : rows) {
    std::printf("%10.5g", row.dx);
    for (size_t m = 0; m < row.linf.size(); ++m) {
      std::printf("  %12.5e", row.linf[m]);
      if (std::isnan(row.order[m]))
        std::printf("  %8s", "-");
      else
        std::printf("  %8.3f", row.order[m]);
    }
    std::printf("\n");
  }

  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream csv(std::filesystem::path(opt.out_dir) / "convergence.csv");
    if (!csv) throw ConfigError("cannot write output to " + opt.out_dir);
    csv << "dx";
    for (const auto& c : comps) csv << ",linf_" << c << ",order_" << c;
    csv << "\n";
    char buf[64];
    for (const ConvergenceRow& row : rows) {
      std::snprintf(buf, sizeof buf, "%.17g", row.dx);
      csv << buf;
      for (size_t m = 0; m < row.linf.size(); ++m) {
        std::snprintf(buf, sizeof buf, "%.17g", row.linf[m]);
        csv << "," << buf << ",";
        if (std::isnan(row.order[m]))
          csv << "nan";
        else {
          std::snprintf(buf, sizeof buf, "%.17g", row.order[m]);
          csv << buf;
        }
      }
      csv << "\n";
    }
    std::printf("table written to %s/convergence.csv\n", opt.out_dir.c_str());
  }
  return 0;
}

int cmd_list_cases() {
  for (const CaseSpec& c : case_registry())
    std::printf("%-26s %-48s [%s]\n", c.id.c_str(), c.description.c_str(),
                c.section.c_str());
  return 0;
}

int cmd_validate() {
  bool all = true;
  for (const PropertyResult& r : run_property_suites()) {
    std::printf("[%s] %-46s worst %.3e (bound %.0e)  %s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.worst, r.threshold, r.detail.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-balanced augmented Roe finite-volume benchmark driver"};
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* run = app.add_subcommand("run", "run a single benchmark case");
  run->add_option("--config", opt.config_path, "key = value config file");
  run->add_option("--case", opt.case_id, "case id (see list-cases)");
  run->add_option("--scheme", opt.scheme,
                  "augmented-fluctuation | augmented-flux | unbalanced");
  run->add_option("--dx", opt.dx, "grid spacing");
  run->add_option("--cells", opt.cells, "number of cells (alternative to --dx)");
  run->add_option("--cfl", opt.cfl, "CFL number in (0, 1]");
  run->add_option("--steps", opt.steps, "terminate after a fixed step count");
  run->add_option("--t-end", opt.t_end, "terminate at a physical time");
  run->add_option("--residual", opt.residual, "terminate when max|dU|/dt drops below");
  run->add_option("--eps-safety", opt.eps_safety, "relaxation safety factor (heat)");
  run->add_option("--out", opt.out_dir, "output directory (solution.csv, report.txt)");
  run->add_option("--assert", opt.assertions,
                  "comma-separated metric<=bound checks, e.g. linf_u<=1e-12");

  CLI::App* conv = app.add_subcommand("convergence", "grid refinement study");
  conv->add_option("--config", opt.config_path, "key = value config file");
  conv->add_option("--case", opt.case_id, "case id");
  conv->add_option("--scheme", opt.scheme, "scheme name");
  conv->add_option("--dx", opt.dx_list, "comma-separated spacings, e.g. 0.5,0.2,0.05")
      ->required();
  conv->add_option("--cfl", opt.cfl, "CFL number in (0, 1]");
  conv->add_option("--steps", opt.steps, "fixed step count per run");
  conv->add_option("--t-end", opt.t_end, "physical end time per run");
  conv->add_option("--residual", opt.residual, "residual termination per run");
  conv->add_option("--eps-safety", opt.eps_safety, "relaxation safety factor (heat)");
  conv->add_option("--out", opt.out_dir, "output directory (convergence.csv)");

  CLI::App* list = app.add_subcommand("list-cases", "print the case registry");
  CLI::App* validate = app.add_subcommand("validate", "run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!opt.config_path.empty()) {
      std::vector<std::string> cli_set;
      CLI::App* active = run->parsed() ? run : conv;
      for (const char* name : {"case", "scheme", "dx", "cells", "cfl", "steps",
                               "t_end", "residual", "eps_safety", "out"}) {
        const std::string flag = std::string("--") + name;
        const std::string dashed =
            flag == "--t_end" ? "--t-end" : (flag == "--eps_safety" ? "--eps-safety" : flag);
        const CLI::Option* o = active->get_option_no_throw(dashed);
        if (o && o->count() > 0) cli_set.emplace_back(name);
      }
      apply_config_file(opt.config_path, opt, cli_set);
    }
    if ((run->parsed() || conv->parsed()) && opt.case_id.empty())
      throw ConfigError("no case selected (use --case or a [case] config section)");

    if (run->parsed()) return cmd_run(opt);
    if (conv->parsed()) return cmd_convergence(opt);
    if (list->parsed()) return cmd_list_cases();
    if (validate->parsed()) return cmd_validate();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  }
  return 0;
}
