#include "cdgrav/stepper.hpp"

#include <cmath>
#include <stdexcept>

namespace cdgrav {

double compute_dt(const AlphaParams& a, double dx, double dy,
                  const StepControl& c, double w1hat) {
  if (std::isnan(a.alpha_x) || std::isnan(a.alpha_y))
    throw PositivityFault("CFL scan produced NaN");
  double dt;
  if (c.mode == StepControl::DtMode::accuracy_matched) {
    double h = dy > 0.0 ? std::min(dx, dy) : dx;
    double amax = std::max(a.alpha_x, a.alpha_y);
    dt = amax > 0.0 ? c.cfl * std::pow(h, 4.0 / 3.0) / amax : c.dt_cap;
  } else if (dy > 0.0) {
    double denom = a.alpha_x / dx + a.alpha_y / dy;
    dt = denom > 0.0 ? c.cfl * 0.5 * c.theta * w1hat / denom : c.dt_cap;
  } else {
    dt = a.alpha_x > 0.0 ? c.cfl * 0.5 * dx * c.theta * w1hat / a.alpha_x
                         : c.dt_cap;
  }
  if (!(dt < c.dt_cap)) dt = c.dt_cap;
  return dt;
}

namespace {

// Convex combination in increment form, y := x + a*(y - x), so a stage with
// a zero residual hands the previous state back bit for bit.
void combine(Field1D& y, double a, const Field1D& x) {
  for (size_t i = 0; i < y.a.size(); ++i)
    y.a[i] = x.a[i] + a * (y.a[i] - x.a[i]);
}
void combine(Field2D& y, double a, const Field2D& x) {
  const double* xs = x.a.data();
  double* ys = y.a.data();
  long n = static_cast<long>(y.a.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) ys[i] = xs[i] + a * (ys[i] - xs[i]);
}
void axpy(Field1D& y, double a, const Field1D& x) {
  for (size_t i = 0; i < y.a.size(); ++i) y.a[i] += a * x.a[i];
}
void axpy(Field2D& y, double a, const Field2D& x) {
  const double* xs = x.a.data();
  double* ys = y.a.data();
  long n = static_cast<long>(y.a.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) ys[i] += a * xs[i];
}

FamilyArgs1D family_args(const System1D& sys, const Field1D& own,
                         const Field1D& opp, bool primal, double inv_tau) {
  FamilyArgs1D fa;
  fa.own = &own;
  fa.opp = &opp;
  fa.eq_own = primal ? &sys.eq->C : &sys.eq->D;
  fa.eq_opp = primal ? &sys.eq->D : &sys.eq->C;
  fa.cache = primal ? &sys.eq->pc : &sys.eq->dc;
  fa.opp_left = primal ? 0 : -1;
  fa.gamma = sys.gamma;
  fa.inv_tau = inv_tau;
  fa.well_balanced = sys.well_balanced;
  fa.phi_x = &sys.phi_x;
  if (!sys.well_balanced) fa.phi_opp = primal ? &sys.phi_hD : &sys.phi_hC;
  return fa;
}

FamilyArgs2D family_args(const System2D& sys, const Field2D& own,
                         const Field2D& opp, bool primal, double inv_tau) {
  FamilyArgs2D fa;
  fa.own = &own;
  fa.opp = &opp;
  fa.eq = sys.eq;
  fa.primal = primal;
  fa.gamma = sys.gamma;
  fa.inv_tau = inv_tau;
  fa.well_balanced = sys.well_balanced;
  fa.phi_x = &sys.phi_x;
  fa.phi_y = &sys.phi_y;
  if (!sys.well_balanced) fa.phi_opp = primal ? &sys.phi_hD : &sys.phi_hC;
  return fa;
}

void assemble_rhs(const FamilyArgs1D& fa, const SchemeTables1D& t,
                  Field1D& out) {
  assemble_rhs_1d(fa, t, out);
}
void assemble_rhs(const FamilyArgs2D& fa, const SchemeTables2D& t,
                  Field2D& out) {
  assemble_rhs_2d(fa, t, out);
}

double w1hat_of(const System1D& sys) { return sys.tables->w1hat; }
double w1hat_of(const System2D& sys) { return sys.tables->t1.w1hat; }

template <class SystemT, class PairT>
void prepare_generic(const SystemT& sys, PairT& u, double t,
                     LimiterReport* rep) {
  auto fill = [&](bool skip_dirichlet) {
    apply_boundary(u.C, &sys.eq->C, sys.bc, t, false, sys.proj_gauss,
                   skip_dirichlet);
    apply_boundary(u.D, &sys.eq->D, sys.bc, t, false, sys.proj_gauss,
                   skip_dirichlet);
  };
  fill(false);
  if (sys.use_weno) {
    std::vector<std::uint8_t> mask;
    long flagged = 0;
    detect_troubled(u.C, sys.eq->C, sys.tvb, mask);
    for (auto m : mask) flagged += m;
    weno_limit(u.C, sys.eq->C, *sys.tables, sys.gamma, mask);
    detect_troubled(u.D, sys.eq->D, sys.tvb, mask);
    for (auto m : mask) flagged += m;
    weno_limit(u.D, sys.eq->D, *sys.tables, sys.gamma, mask);
    if (rep) rep->weno_troubled += flagged;
    if (flagged) fill(true);
  }
  if (sys.use_pp) {
    pp_limit(u.C, *sys.tables, sys.gamma, rep);
    pp_limit(u.D, *sys.tables, sys.gamma, rep);
    fill(true);
  }
}

}  // namespace

void prepare_pair(const System1D& sys, SolutionPair1D& u, double t,
                  LimiterReport* rep) {
  prepare_generic(sys, u, t, rep);
}

void prepare_pair(const System2D& sys, SolutionPair2D& u, double t,
                  LimiterReport* rep) {
  prepare_generic(sys, u, t, rep);
}

AlphaParams scan_alpha(const System1D& sys, const SolutionPair1D& u) {
  AlphaParams a;
  a.alpha_x = std::max(
      alpha_params_1d(family_args(sys, u.C, u.D, true, 0.0), *sys.tables),
      alpha_params_1d(family_args(sys, u.D, u.C, false, 0.0), *sys.tables));
  return a;
}

AlphaParams scan_alpha(const System2D& sys, const SolutionPair2D& u) {
  AlphaParams ac =
      alpha_params_2d(family_args(sys, u.C, u.D, true, 0.0), *sys.tables);
  AlphaParams ad =
      alpha_params_2d(family_args(sys, u.D, u.C, false, 0.0), *sys.tables);
  return {std::max(ac.alpha_x, ad.alpha_x), std::max(ac.alpha_y, ad.alpha_y)};
}

namespace {

template <class SystemT, class PairT>
void rk3_generic(const SystemT& sys, PairT& u, double t, double dt,
                 double theta, LimiterReport* rep, PairT& work, PairT& rhs) {
  double inv_tau = theta / dt;
  auto eval_rhs = [&](const PairT& v) {
    assemble_rhs(family_args(sys, v.C, v.D, true, inv_tau), *sys.tables, rhs.C);
    assemble_rhs(family_args(sys, v.D, v.C, false, inv_tau), *sys.tables,
                 rhs.D);
  };
  // stage 1
  eval_rhs(u);
  work = u;
  axpy(work.C, dt, rhs.C);
  axpy(work.D, dt, rhs.D);
  prepare_pair(sys, work, t + dt, rep);
  // stage 2
  eval_rhs(work);
  axpy(work.C, dt, rhs.C);
  axpy(work.D, dt, rhs.D);
  combine(work.C, 0.25, u.C);
  combine(work.D, 0.25, u.D);
  prepare_pair(sys, work, t + 0.5 * dt, rep);
  // stage 3
  eval_rhs(work);
  axpy(work.C, dt, rhs.C);
  axpy(work.D, dt, rhs.D);
  combine(work.C, 2.0 / 3.0, u.C);
  combine(work.D, 2.0 / 3.0, u.D);
  u = work;
}

template <class SystemT, class PairT>
StepStats advance_generic(const SystemT& sys, const StepControl& control,
                          PairT& u, double t0, const StepCallback& on_step,
                          double dx, double dy) {
  StepStats stats;
  PairT work = u, rhs = u;
  double t = t0;
  const double t_end = control.t_final;
  const double tiny = 1e-14 * std::max(1.0, std::abs(t_end));
  long step = 0;
  while (t_end - t > tiny) {
    LimiterReport rep;
    prepare_pair(sys, u, t, &rep);
    AlphaParams a = scan_alpha(sys, u);
    double dt = compute_dt(a, dx, dy, control, w1hat_of(sys));
    if (!(dt > 0.0)) throw std::runtime_error("nonpositive time step");
    if (t + dt > t_end) dt = t_end - t;
    rk3_generic(sys, u, t, dt, control.theta, &rep, work, rhs);
    t += dt;
    ++step;
    stats.limiter.merge(rep);
    stats.min_rho = std::min(stats.min_rho, rep.min_rho);
    stats.min_p = std::min(stats.min_p, rep.min_p);
    if (on_step) {
      StepRecord r;
      r.step = step;
      r.t = t;
      r.dt = dt;
      r.min_rho = rep.min_rho;
      r.min_p = rep.min_p;
      r.weno_troubled = rep.weno_troubled;
      r.density_limited = rep.density_limited;
      r.pressure_limited = rep.pressure_limited;
      on_step(r);
    }
    if (step >= control.max_steps && t_end - t > tiny)
      throw std::runtime_error("max step count exceeded before t_final");
  }
  LimiterReport rep;
  prepare_pair(sys, u, t_end, &rep);
  stats.limiter.merge(rep);
  stats.min_rho = std::min(stats.min_rho, rep.min_rho);
  stats.min_p = std::min(stats.min_p, rep.min_p);
  stats.steps = step;
  return stats;
}

}  // namespace

void ssp_rk3_step(const System1D& sys, SolutionPair1D& u, double t, double dt,
                  double theta, LimiterReport* rep) {
  SolutionPair1D work = u, rhs = u;
  rk3_generic(sys, u, t, dt, theta, rep, work, rhs);
}

void ssp_rk3_step(const System2D& sys, SolutionPair2D& u, double t, double dt,
                  double theta, LimiterReport* rep) {
  SolutionPair2D work = u, rhs = u;
  rk3_generic(sys, u, t, dt, theta, rep, work, rhs);
}

StepStats advance_to(const System1D& sys, const StepControl& control,
                     SolutionPair1D& u, double t0, const StepCallback& on_step) {
  return advance_generic(sys, control, u, t0, on_step, sys.mesh->dx, -1.0);
}

StepStats advance_to(const System2D& sys, const StepControl& control,
                     SolutionPair2D& u, double t0, const StepCallback& on_step) {
  return advance_generic(sys, control, u, t0, on_step, sys.mesh->dx,
                         sys.mesh->dy);
}

}  // namespace cdgrav
