#ifndef CDGRAV_STEPPER_HPP_
#define CDGRAV_STEPPER_HPP_

#include <climits>
#include <functional>
#include <limits>

#include "cdgrav/boundary.hpp"
#include "cdgrav/limiter.hpp"
#include "cdgrav/residual1d.hpp"
#include "cdgrav/residual2d.hpp"

namespace cdgrav {

struct StepControl {
  enum class DtMode { cfl, accuracy_matched };
  double cfl = 0.25;    // 0.25 for k=2, 0.15 for k=3
  double theta = 1.0;   // dt / tau_max
  double t_final = 0.0;
  long max_steps = LONG_MAX;
  double dt_cap = std::numeric_limits<double>::infinity();
  DtMode mode = DtMode::cfl;
};

// dy <= 0 selects the one-dimensional bound.
double compute_dt(const AlphaParams& a, double dx, double dy,
                  const StepControl& c, double w1hat);

struct StepRecord {
  long step = 0;
  double t = 0.0, dt = 0.0;
  double min_rho = 0.0, min_p = 0.0;
  long weno_troubled = 0, density_limited = 0, pressure_limited = 0;
};

struct StepStats {
  long steps = 0;
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
  LimiterReport limiter;
};

struct SolutionPair1D {
  Field1D C, D;
};
struct SolutionPair2D {
  Field2D C, D;
};

// Static pieces of a configured run.
struct System1D {
  const Mesh1D* mesh = nullptr;
  const SchemeTables1D* tables = nullptr;
  const EquilibriumPair1D* eq = nullptr;
  BoundarySpec1D bc;
  double gamma = 1.4;
  bool well_balanced = true;
  bool use_pp = true;
  bool use_weno = false;
  TvbParams tvb;
  Fn1D phi_x;        // analytic gradient, used by the non-WB CFL scan
  // L2-projected potential per family; the standard (non-WB) source differs
  // from the analytic gradient exactly by this projection step
  Field1D phi_hC, phi_hD;
  int proj_gauss = 0;
};

struct System2D {
  const Mesh2D* mesh = nullptr;
  const SchemeTables2D* tables = nullptr;
  const EquilibriumPair2D* eq = nullptr;
  BoundarySpec2D bc;
  double gamma = 1.4;
  bool well_balanced = true;
  bool use_pp = true;
  bool use_weno = false;
  TvbParams tvb;
  Fn2D phi_x, phi_y;
  Field2D phi_hC, phi_hD;
  int proj_gauss = 0;
};

// Boundary fill + (optional) WENO + positivity limiting of both copies, the
// per-stage preparation applied before every residual evaluation.
void prepare_pair(const System1D& sys, SolutionPair1D& u, double t,
                  LimiterReport* rep);
void prepare_pair(const System2D& sys, SolutionPair2D& u, double t,
                  LimiterReport* rep);

AlphaParams scan_alpha(const System1D& sys, const SolutionPair1D& u);
AlphaParams scan_alpha(const System2D& sys, const SolutionPair2D& u);

// One SSP-RK3 step of both copies with per-stage limiting; dt must already
// satisfy the CFL bound.
void ssp_rk3_step(const System1D& sys, SolutionPair1D& u, double t, double dt,
                  double theta, LimiterReport* rep);
void ssp_rk3_step(const System2D& sys, SolutionPair2D& u, double t, double dt,
                  double theta, LimiterReport* rep);

using StepCallback = std::function<void(const StepRecord&)>;

StepStats advance_to(const System1D& sys, const StepControl& control,
                     SolutionPair1D& u, double t0,
                     const StepCallback& on_step = {});
StepStats advance_to(const System2D& sys, const StepControl& control,
                     SolutionPair2D& u, double t0,
                     const StepCallback& on_step = {});

}  // namespace cdgrav

#endif
