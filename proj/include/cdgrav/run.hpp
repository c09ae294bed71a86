#ifndef CDGRAV_RUN_HPP_
#define CDGRAV_RUN_HPP_

#include <array>
#include <memory>
#include <string>

#include "cdgrav/config.hpp"
#include "cdgrav/equilibrium.hpp"
#include "cdgrav/problems.hpp"
#include "cdgrav/stepper.hpp"

namespace cdgrav {

struct RunOptions {
  int k = 2;
  int n_gauss = 0;  // volume Gauss points per half cell, 0 = k+1
  int nx = 0, ny = 0;  // 0 keeps the problem default
  double cfl = 0.0;    // 0 picks 0.25 (k<=2) or 0.15 (k=3)
  double theta = 1.0;
  double t_final = std::numeric_limits<double>::quiet_NaN();
  StepControl::DtMode dt_mode = StepControl::DtMode::cfl;
  long max_steps = LONG_MAX;
  double dt_cap = std::numeric_limits<double>::infinity();
  bool pp = true;
  int weno = -1;  // -1 problem default
  std::vector<double> tvb_m;
  bool well_balanced = true;
};

// A fully assembled 1D run: meshes, tables, projected equilibrium, limited
// initial data.  Non-copyable because the system wires internal pointers.
class Runner1D {
 public:
  Runner1D(const ProblemSpec& spec, const RunOptions& opt);
  Runner1D(const Runner1D&) = delete;
  Runner1D& operator=(const Runner1D&) = delete;

  StepStats run(const StepCallback& cb = {});
  std::vector<double> error_vs_exact(int p_norm) const;  // 1, 2, or 0 = sup
  std::vector<double> wb_error(bool primal) const;
  State1 eval(double x) const;
  std::array<double, 3> totals(bool primal) const;

  double time() const { return t_; }
  const Mesh1D& mesh() const { return mesh_; }
  const ProblemSpec& spec() const { return spec_; }
  const SchemeTables1D& tables() const { return tables_; }
  const EquilibriumPair1D& equilibrium() const { return eq_; }
  const System1D& system() const { return sys_; }
  SolutionPair1D& state() { return u_; }
  const SolutionPair1D& state() const { return u_; }
  StepControl& control() { return control_; }
  const StepStats& stats() const { return stats_; }

 private:
  ProblemSpec spec_;
  RunOptions opt_;
  Mesh1D mesh_;
  SchemeTables1D tables_;
  EquilibriumPair1D eq_;
  System1D sys_;
  SolutionPair1D u_;
  StepControl control_;
  StepStats stats_;
  double t_ = 0.0;
};

class Runner2D {
 public:
  Runner2D(const ProblemSpec& spec, const RunOptions& opt);
  Runner2D(const Runner2D&) = delete;
  Runner2D& operator=(const Runner2D&) = delete;

  StepStats run(const StepCallback& cb = {});
  std::vector<double> error_vs_exact(int p_norm) const;
  std::vector<double> wb_error(bool primal) const;
  State2 eval(double x, double y) const;
  std::array<double, 4> totals(bool primal) const;

  double time() const { return t_; }
  const Mesh2D& mesh() const { return mesh_; }
  const ProblemSpec& spec() const { return spec_; }
  const SchemeTables2D& tables() const { return tables_; }
  const EquilibriumPair2D& equilibrium() const { return eq_; }
  const System2D& system() const { return sys_; }
  SolutionPair2D& state() { return u_; }
  const SolutionPair2D& state() const { return u_; }
  StepControl& control() { return control_; }
  const StepStats& stats() const { return stats_; }

 private:
  ProblemSpec spec_;
  RunOptions opt_;
  Mesh2D mesh_;
  SchemeTables2D tables_;
  EquilibriumPair2D eq_;
  System2D sys_;
  SolutionPair2D u_;
  StepControl control_;
  StepStats stats_;
  double t_ = 0.0;
};

// Configuration plumbing shared by the CLI and the python module.
ProblemSpec problem_from_config(const Config& cfg);
RunOptions options_from_config(const Config& cfg, const ProblemSpec& spec);

// Subcommand drivers; they throw ConfigError / PositivityFault /
// runtime_error, which the CLI maps to exit codes.
void cli_run(const Config& cfg, const std::string& out_dir, bool quiet);
void cli_convergence(const Config& cfg, const std::string& out_dir,
                     bool quiet);
void cli_wb_report(const Config& cfg, const std::string& out_dir, bool quiet);
void cli_list_problems();

}  // namespace cdgrav

#endif
