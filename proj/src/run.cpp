#include "cdgrav/run.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "cdgrav/projection.hpp"

namespace cdgrav {

namespace {

// L1 norms are domain averaged, (1/|O|) sum_cells int |diff|; together with
// the per-cell (k+1)-point Gauss sampling this reproduces the scale of the
// reference tables.
constexpr bool kDomainAveragedNorms = true;

int ghost_width(bool weno) { return weno ? 2 : 1; }

double default_cfl(int k) { return k >= 3 ? 0.15 : 0.25; }

StepControl make_control(const RunOptions& opt, double default_t) {
  StepControl c;
  c.cfl = opt.cfl > 0.0 ? opt.cfl : default_cfl(opt.k);
  c.theta = opt.theta;
  c.t_final = std::isnan(opt.t_final) ? default_t : opt.t_final;
  c.max_steps = opt.max_steps;
  c.dt_cap = opt.dt_cap;
  c.mode = opt.dt_mode;
  return c;
}

std::string fmt_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

Runner1D::Runner1D(const ProblemSpec& spec, const RunOptions& opt)
    : spec_(spec), opt_(opt) {
  if (spec_.dim != 1) throw ConfigError(spec_.id + " is not one-dimensional");
  int nx = opt.nx > 0 ? opt.nx : spec_.default_nx;
  mesh_ = Mesh1D(spec_.x_min, spec_.x_max, nx);
  tables_ = make_tables_1d(opt.k, opt.n_gauss);
  bool weno = opt.weno >= 0 ? opt.weno != 0 : spec_.default_weno;
  int ghost = ghost_width(weno);

  eq_ = project_equilibrium(spec_.eq1, mesh_, opt.k, spec_.gas.gamma, ghost);
  BoundarySpec1D bc = spec_.bc1;
  apply_boundary(eq_.C, &eq_.C, bc, 0.0, true);
  apply_boundary(eq_.D, &eq_.D, bc, 0.0, true);
  pp_limit(eq_.C, tables_, spec_.gas.gamma, nullptr);
  pp_limit(eq_.D, tables_, spec_.gas.gamma, nullptr);
  apply_boundary(eq_.C, &eq_.C, bc, 0.0, true);
  apply_boundary(eq_.D, &eq_.D, bc, 0.0, true);
  compute_eq_caches(eq_, tables_);
  validate_equilibrium(eq_, tables_);

  sys_.mesh = &mesh_;
  sys_.tables = &tables_;
  sys_.eq = &eq_;
  sys_.bc = bc;
  sys_.gamma = spec_.gas.gamma;
  sys_.well_balanced = opt.well_balanced;
  sys_.use_pp = opt.pp;
  sys_.use_weno = weno;
  sys_.tvb.m = !opt.tvb_m.empty() ? opt.tvb_m : spec_.tvb_m;
  sys_.phi_x = spec_.grav1.phi_x;
  if (!opt.well_balanced) {
    sys_.phi_hC.resize(MeshFamily::primal, mesh_, ghost, 1, opt.k + 1);
    sys_.phi_hD.resize(MeshFamily::dual, mesh_, ghost, 1, opt.k + 1);
    for (Field1D* f : {&sys_.phi_hC, &sys_.phi_hD})
      project_field(spec_.grav1.phi, *f, 0, -ghost, f->n_cells + ghost, false);
  }

  u_.C.resize(MeshFamily::primal, mesh_, ghost, 3, opt.k + 1);
  u_.D.resize(MeshFamily::dual, mesh_, ghost, 3, opt.k + 1);
  auto init = spec_.init1;
  FnMulti1D finit = [init](double x, double* out) {
    State1 s = init(x);
    out[0] = s.rho;
    out[1] = s.m;
    out[2] = s.E;
  };
  // the novel projection is applied to the initial data as well; the
  // standard scheme keeps the plain L2 projection
  for (Field1D* f : {&u_.C, &u_.D})
    for (int j = 0; j < f->n_cells; ++j)
      project_cell_multi(finit, 3, f->center(j), f->dx, opt.k, f->cell(j),
                         opt.well_balanced);
  control_ = make_control(opt, spec_.default_t_final);
  LimiterReport rep;
  prepare_pair(sys_, u_, 0.0, &rep);
}

StepStats Runner1D::run(const StepCallback& cb) {
  stats_ = advance_to(sys_, control_, u_, t_, cb);
  t_ = control_.t_final;
  return stats_;
}

namespace {

template <class EvalCell, class ExactAt>
std::vector<double> norms_generic(int n_comp, int p_norm, double measure,
                                  long n_cells, const EvalCell& cell_term,
                                  const ExactAt&) {
  std::vector<double> acc(n_comp, 0.0);
  for (long cell = 0; cell < n_cells; ++cell) cell_term(cell, acc);
  if (p_norm == 2)
    for (double& v : acc) v = std::sqrt(v);
  if (kDomainAveragedNorms && p_norm != 0)
    for (double& v : acc) v /= measure;
  return acc;
}

}  // namespace

std::vector<double> Runner1D::error_vs_exact(int p_norm) const {
  if (!spec_.has_exact)
    throw std::runtime_error(spec_.id + " has no exact solution");
  // sampled with the scheme's own order, k+1 Gauss points per cell
  QuadRule g = gauss_rule_ref(tables_.k + 1);
  const Field1D& f = u_.C;
  double tt = t_;
  auto exact = spec_.exact1;
  auto cell_term = [&](long j, std::vector<double>& acc) {
    for (size_t q = 0; q < g.nodes.size(); ++q) {
      double xi = g.nodes[q];
      double x = f.center(static_cast<int>(j)) + 0.5 * f.dx * xi;
      State1 ex = exact(x, tt);
      const double* exv = &ex.rho;
      for (int c = 0; c < 3; ++c) {
        double d = std::abs(f.eval(static_cast<int>(j), c, xi) - exv[c]);
        double w = g.weights[q] * f.dx;
        if (p_norm == 0)
          acc[c] = std::max(acc[c], d);
        else if (p_norm == 2)
          acc[c] += w * d * d;
        else
          acc[c] += w * d;
      }
    }
  };
  return norms_generic(3, p_norm, mesh_.x_max - mesh_.x_min, mesh_.nx,
                       cell_term, 0);
}

std::vector<double> Runner1D::wb_error(bool primal) const {
  const Field1D& f = primal ? u_.C : u_.D;
  const Field1D& e = primal ? eq_.C : eq_.D;
  QuadRule g = gauss_rule_ref(tables_.k + 1);
  std::vector<double> acc(3, 0.0);
  for (int j = 0; j < f.n_cells; ++j)
    for (size_t q = 0; q < g.nodes.size(); ++q) {
      double xi = g.nodes[q];
      double w = g.weights[q] * f.dx;
      for (int c = 0; c < 3; ++c)
        acc[c] += w * std::abs(f.eval(j, c, xi) - e.eval(j, c, xi));
    }
  if (kDomainAveragedNorms)
    for (double& v : acc) v /= (mesh_.x_max - mesh_.x_min);
  return acc;
}

State1 Runner1D::eval(double x) const {
  const Field1D& f = u_.C;
  int j = static_cast<int>(std::floor((x - mesh_.x_min) / mesh_.dx));
  j = std::clamp(j, 0, mesh_.nx - 1);
  double xi = 2.0 * (x - f.center(j)) / f.dx;
  xi = std::clamp(xi, -1.0, 1.0);
  return {f.eval(j, 0, xi), f.eval(j, 1, xi), f.eval(j, 2, xi)};
}

std::array<double, 3> Runner1D::totals(bool primal) const {
  const Field1D& f = primal ? u_.C : u_.D;
  // the straddling dual cell that wraps around is counted once
  int n = f.n_cells;
  if (!primal && sys_.bc.left == BcKind::periodic) n -= 1;
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < n; ++j) out[c] += f.average(j, c) * f.dx;
  return out;
}

Runner2D::Runner2D(const ProblemSpec& spec, const RunOptions& opt)
    : spec_(spec), opt_(opt) {
  if (spec_.dim != 2) throw ConfigError(spec_.id + " is not two-dimensional");
  int nx = opt.nx > 0 ? opt.nx : spec_.default_nx;
  int ny = opt.ny > 0 ? opt.ny : spec_.default_ny;
  mesh_ = Mesh2D(spec_.x_min, spec_.x_max, spec_.y_min, spec_.y_max, nx, ny);
  tables_ = make_tables_2d(opt.k, opt.n_gauss);
  bool weno = opt.weno >= 0 ? opt.weno != 0 : spec_.default_weno;
  int ghost = ghost_width(weno);

  eq_ = project_equilibrium(spec_.eq2, mesh_, opt.k, spec_.gas.gamma, ghost);
  BoundarySpec2D bc = spec_.bc2;
  apply_boundary(eq_.C, &eq_.C, bc, 0.0, true);
  apply_boundary(eq_.D, &eq_.D, bc, 0.0, true);
  pp_limit(eq_.C, tables_, spec_.gas.gamma, nullptr);
  pp_limit(eq_.D, tables_, spec_.gas.gamma, nullptr);
  apply_boundary(eq_.C, &eq_.C, bc, 0.0, true);
  apply_boundary(eq_.D, &eq_.D, bc, 0.0, true);
  compute_eq_caches(eq_, tables_);
  validate_equilibrium(eq_, tables_);

  sys_.mesh = &mesh_;
  sys_.tables = &tables_;
  sys_.eq = &eq_;
  sys_.bc = bc;
  sys_.gamma = spec_.gas.gamma;
  sys_.well_balanced = opt.well_balanced;
  sys_.use_pp = opt.pp;
  sys_.use_weno = weno;
  sys_.tvb.m = !opt.tvb_m.empty() ? opt.tvb_m : spec_.tvb_m;
  sys_.phi_x = spec_.grav2.phi_x;
  sys_.phi_y = spec_.grav2.phi_y;
  if (!opt.well_balanced) {
    int nc2 = Basis2D(opt.k).size();
    sys_.phi_hC.resize(MeshFamily::primal, mesh_, ghost, 1, nc2);
    sys_.phi_hD.resize(MeshFamily::dual, mesh_, ghost, 1, nc2);
    for (Field2D* f : {&sys_.phi_hC, &sys_.phi_hD})
      project_field(spec_.grav2.phi, *f, 0, -ghost, f->nx + ghost, -ghost,
                    f->ny + ghost, false);
  }

  int ncoef = Basis2D(opt.k).size();
  u_.C.resize(MeshFamily::primal, mesh_, ghost, 4, ncoef);
  u_.D.resize(MeshFamily::dual, mesh_, ghost, 4, ncoef);
  auto init = spec_.init2;
  FnMulti2D finit = [init](double x, double y, double* out) {
    State2 s = init(x, y);
    out[0] = s.rho;
    out[1] = s.m1;
    out[2] = s.m2;
    out[3] = s.E;
  };
  for (Field2D* f : {&u_.C, &u_.D})
    for (int j = 0; j < f->ny; ++j)
      for (int i = 0; i < f->nx; ++i)
        project_cell_multi(finit, 4, f->center_x(i), f->center_y(j), f->dx,
                           f->dy, opt.k, f->cell(i, j), opt.well_balanced);
  control_ = make_control(opt, spec_.default_t_final);
  LimiterReport rep;
  prepare_pair(sys_, u_, 0.0, &rep);
}

StepStats Runner2D::run(const StepCallback& cb) {
  stats_ = advance_to(sys_, control_, u_, t_, cb);
  t_ = control_.t_final;
  return stats_;
}

std::vector<double> Runner2D::error_vs_exact(int p_norm) const {
  if (!spec_.has_exact)
    throw std::runtime_error(spec_.id + " has no exact solution");
  QuadRule g = gauss_rule_ref(tables_.k + 1);
  const Field2D& f = u_.C;
  double tt = t_;
  auto exact = spec_.exact2;
  std::vector<double> acc(4, 0.0);
  int nq = static_cast<int>(g.nodes.size());
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i)
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          double xi = g.nodes[qx], eta = g.nodes[qy];
          double x = f.center_x(i) + 0.5 * f.dx * xi;
          double y = f.center_y(j) + 0.5 * f.dy * eta;
          State2 ex = exact(x, y, tt);
          const double* exv = &ex.rho;
          double w = g.weights[qx] * g.weights[qy] * f.dx * f.dy;
          for (int c = 0; c < 4; ++c) {
            double d = std::abs(f.eval(i, j, c, xi, eta) - exv[c]);
            if (p_norm == 0)
              acc[c] = std::max(acc[c], d);
            else if (p_norm == 2)
              acc[c] += w * d * d;
            else
              acc[c] += w * d;
          }
        }
  if (p_norm == 2)
    for (double& v : acc) v = std::sqrt(v);
  if (kDomainAveragedNorms && p_norm != 0) {
    double measure = (mesh_.x_max - mesh_.x_min) * (mesh_.y_max - mesh_.y_min);
    for (double& v : acc) v /= measure;
  }
  return acc;
}

std::vector<double> Runner2D::wb_error(bool primal) const {
  const Field2D& f = primal ? u_.C : u_.D;
  const Field2D& e = primal ? eq_.C : eq_.D;
  QuadRule g = gauss_rule_ref(tables_.k + 1);
  int nq = static_cast<int>(g.nodes.size());
  std::vector<double> acc(4, 0.0);
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i)
      for (int qx = 0; qx < nq; ++qx)
        for (int qy = 0; qy < nq; ++qy) {
          double xi = g.nodes[qx], eta = g.nodes[qy];
          double w = g.weights[qx] * g.weights[qy] * f.dx * f.dy;
          for (int c = 0; c < 4; ++c)
            acc[c] += w * std::abs(f.eval(i, j, c, xi, eta) -
                                   e.eval(i, j, c, xi, eta));
        }
  if (kDomainAveragedNorms) {
    double measure = (mesh_.x_max - mesh_.x_min) * (mesh_.y_max - mesh_.y_min);
    for (double& v : acc) v /= measure;
  }
  return acc;
}

State2 Runner2D::eval(double x, double y) const {
  const Field2D& f = u_.C;
  int i = static_cast<int>(std::floor((x - mesh_.x_min) / mesh_.dx));
  int j = static_cast<int>(std::floor((y - mesh_.y_min) / mesh_.dy));
  i = std::clamp(i, 0, mesh_.nx - 1);
  j = std::clamp(j, 0, mesh_.ny - 1);
  double xi = std::clamp(2.0 * (x - f.center_x(i)) / f.dx, -1.0, 1.0);
  double eta = std::clamp(2.0 * (y - f.center_y(j)) / f.dy, -1.0, 1.0);
  return {f.eval(i, j, 0, xi, eta), f.eval(i, j, 1, xi, eta),
          f.eval(i, j, 2, xi, eta), f.eval(i, j, 3, xi, eta)};
}

std::array<double, 4> Runner2D::totals(bool primal) const {
  const Field2D& f = primal ? u_.C : u_.D;
  int nx = f.nx, ny = f.ny;
  if (!primal && sys_.bc.left == BcKind::periodic) nx -= 1;
  if (!primal && sys_.bc.bottom == BcKind::periodic) ny -= 1;
  std::array<double, 4> out{0, 0, 0, 0};
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        out[c] += f.average(i, j, c) * f.dx * f.dy;
  return out;
}

// ---------------------------------------------------------------------------
// configuration plumbing and CLI drivers

ProblemSpec problem_from_config(const Config& cfg) {
  std::string id = cfg.get("problem.id", "");
  if (id.empty()) throw ConfigError("problem.id is required");
  ProblemParams par;
  if (cfg.has("problem.eta")) par.eta = cfg.get_double("problem.eta", 0.0);
  return make_problem(id, par);
}

RunOptions options_from_config(const Config& cfg, const ProblemSpec& spec) {
  RunOptions opt;
  opt.k = static_cast<int>(cfg.get_long("space.degree", spec.default_k));
  if (opt.k < 0 || opt.k > 3) throw ConfigError("space.degree must be 0..3");
  opt.n_gauss = static_cast<int>(cfg.get_long("space.gauss", 0));
  opt.nx = static_cast<int>(cfg.get_long("mesh.nx", 0));
  opt.ny = static_cast<int>(cfg.get_long("mesh.ny", 0));
  opt.cfl = cfg.get_double("time.cfl", 0.0);
  opt.theta = cfg.get_double("time.theta", 1.0);
  if (!(opt.theta > 0.0 && opt.theta <= 1.0))
    throw ConfigError("time.theta must lie in (0,1]");
  if (cfg.has("time.t_final"))
    opt.t_final = cfg.get_double("time.t_final", 0.0);
  std::string mode = cfg.get("time.dt_mode", "cfl");
  if (mode == "cfl")
    opt.dt_mode = StepControl::DtMode::cfl;
  else if (mode == "accuracy_matched")
    opt.dt_mode = StepControl::DtMode::accuracy_matched;
  else
    throw ConfigError("time.dt_mode must be cfl or accuracy_matched");
  opt.max_steps = cfg.get_long("time.max_steps", LONG_MAX);
  opt.pp = cfg.get_bool("limiter.pp", true);
  if (cfg.has("limiter.weno")) opt.weno = cfg.get_bool("limiter.weno", false);
  opt.tvb_m = cfg.get_list("limiter.tvb_m");
  opt.well_balanced = cfg.get_bool("scheme.well_balanced", true);
  return opt;
}

namespace {

namespace fs = std::filesystem;

void write_csv_1d(const Runner1D& r, const std::string& path) {
  std::ofstream out(path);
  const Field1D& f = r.state().C;
  const Field1D& e = r.equilibrium().C;
  double gamma = r.spec().gas.gamma;
  out << "x,rho,m,E,p,u,drho,dm,dE\n";
  auto emit = [&](int j, double xi, double x) {
    State1 s{f.eval(j, 0, xi), f.eval(j, 1, xi), f.eval(j, 2, xi)};
    double p = pressure(s, gamma);
    out << fmt_double(x) << ',' << fmt_double(s.rho) << ',' << fmt_double(s.m)
        << ',' << fmt_double(s.E) << ',' << fmt_double(p) << ','
        << fmt_double(s.m / s.rho);
    out << ',' << fmt_double(s.rho - e.eval(j, 0, xi)) << ','
        << fmt_double(s.m - e.eval(j, 1, xi)) << ','
        << fmt_double(s.E - e.eval(j, 2, xi));
    out << '\n';
  };
  for (int j = 0; j < f.n_cells; ++j) {
    emit(j, 0.0, f.center(j));
    emit(j, 1.0, f.center(j) + 0.5 * f.dx);
  }
}

void write_csv_2d(const Runner2D& r, const std::string& path, bool dual) {
  std::ofstream out(path);
  const Field2D& f = dual ? r.state().D : r.state().C;
  const Field2D& e = dual ? r.equilibrium().D : r.equilibrium().C;
  double gamma = r.spec().gas.gamma;
  out << "x,y,rho,m1,m2,E,p,u1,u2,drho,dm1,dm2,dE\n";
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      State2 s{f.average(i, j, 0), f.average(i, j, 1), f.average(i, j, 2),
               f.average(i, j, 3)};
      double p = pressure(s, gamma);
      out << fmt_double(f.center_x(i)) << ',' << fmt_double(f.center_y(j))
          << ',' << fmt_double(s.rho) << ',' << fmt_double(s.m1) << ','
          << fmt_double(s.m2) << ',' << fmt_double(s.E) << ',' << fmt_double(p)
          << ',' << fmt_double(s.m1 / s.rho) << ','
          << fmt_double(s.m2 / s.rho) << ','
          << fmt_double(s.rho - e.average(i, j, 0)) << ','
          << fmt_double(s.m1 - e.average(i, j, 1)) << ','
          << fmt_double(s.m2 - e.average(i, j, 2)) << ','
          << fmt_double(s.E - e.average(i, j, 3)) << '\n';
    }
}

nlohmann::json report_json(const std::string& id, int dim,
                           const std::vector<double>& l1,
                           const std::vector<double>& wb_c,
                           const std::vector<double>& wb_d,
                           const StepStats& stats, double t_final) {
  nlohmann::json j;
  j["problem"] = id;
  j["t_final"] = t_final;
  j["steps"] = stats.steps;
  j["min_rho"] = stats.min_rho;
  j["min_p"] = stats.min_p;
  j["limiter"] = {{"density_limited", stats.limiter.density_limited},
                  {"pressure_limited", stats.limiter.pressure_limited},
                  {"weno_troubled", stats.limiter.weno_troubled},
                  {"min_theta1", stats.limiter.min_theta1},
                  {"min_theta2", stats.limiter.min_theta2}};
  if (!l1.empty()) j["l1_error"] = l1;
  if (!wb_c.empty()) {
    j["wb_l1_primal"] = wb_c;
    j["wb_l1_dual"] = wb_d;
  }
  (void)dim;
  return j;
}

struct StepLogger {
  std::ofstream file;
  bool quiet = true;
  long every = 200;
  void open(const std::string& path) { file.open(path); }
  StepCallback callback() {
    return [this](const StepRecord& r) {
      if (file.is_open())
        file << r.step << " t=" << fmt_double(r.t) << " dt=" << fmt_double(r.dt)
             << " min_rho=" << fmt_double(r.min_rho)
             << " min_p=" << fmt_double(r.min_p)
             << " weno=" << r.weno_troubled
             << " limited=" << r.density_limited + r.pressure_limited << "\n";
      if (!quiet && r.step % every == 0)
        std::cout << "step " << r.step << " t=" << r.t << " dt=" << r.dt
                  << "\n";
    };
  }
};

}  // namespace

void cli_run(const Config& cfg, const std::string& out_dir, bool quiet) {
  ProblemSpec spec = problem_from_config(cfg);
  RunOptions opt = options_from_config(cfg, spec);
  long cadence = cfg.get_long("output.cadence", 0);
  bool dump_dual = cfg.get_bool("output.dual", false);
  cfg.check_consumed();

  if (!out_dir.empty()) fs::create_directories(out_dir);
  StepLogger logger;
  logger.quiet = quiet;
  if (!out_dir.empty()) logger.open(out_dir + "/steps.log");

  auto snapshot_name = [&](long step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "/fields_%06ld.csv", step);
    return out_dir + buf;
  };

  std::vector<double> l1, wb_c, wb_d;
  StepStats stats;
  double t_final = 0.0;
  if (spec.dim == 1) {
    Runner1D r(spec, opt);
    StepCallback log_cb = logger.callback();
    StepCallback cb = [&](const StepRecord& rec) {
      log_cb(rec);
      if (cadence > 0 && !out_dir.empty() && rec.step % cadence == 0)
        write_csv_1d(r, snapshot_name(rec.step));
    };
    stats = r.run(cb);
    t_final = r.time();
    if (spec.has_exact) l1 = r.error_vs_exact(1);
    wb_c = r.wb_error(true);
    wb_d = r.wb_error(false);
    if (!out_dir.empty()) write_csv_1d(r, out_dir + "/fields.csv");
  } else {
    Runner2D r(spec, opt);
    StepCallback log_cb = logger.callback();
    StepCallback cb = [&](const StepRecord& rec) {
      log_cb(rec);
      if (cadence > 0 && !out_dir.empty() && rec.step % cadence == 0)
        write_csv_2d(r, snapshot_name(rec.step), false);
    };
    stats = r.run(cb);
    t_final = r.time();
    if (spec.has_exact) l1 = r.error_vs_exact(1);
    wb_c = r.wb_error(true);
    wb_d = r.wb_error(false);
    if (!out_dir.empty()) {
      write_csv_2d(r, out_dir + "/fields.csv", false);
      if (dump_dual) write_csv_2d(r, out_dir + "/fields_dual.csv", true);
    }
  }
  nlohmann::json j =
      report_json(spec.id, spec.dim, l1, wb_c, wb_d, stats, t_final);
  if (!out_dir.empty()) {
    std::ofstream(out_dir + "/report.json") << j.dump(2) << "\n";
  }
  if (!quiet) std::cout << j.dump(2) << "\n";
}

void cli_convergence(const Config& cfg, const std::string& out_dir,
                     bool quiet) {
  ProblemSpec spec = problem_from_config(cfg);
  RunOptions opt = options_from_config(cfg, spec);
  std::vector<double> ladder_d = cfg.get_list("ladder.n");
  cfg.check_consumed();
  if (ladder_d.size() < 2)
    throw ConfigError("ladder.n needs at least two mesh sizes");
  if (!spec.has_exact)
    throw ConfigError(spec.id + " has no exact solution for a convergence study");

  int n_comp = spec.dim == 1 ? 3 : 4;
  std::vector<std::vector<double>> errors;
  std::vector<long> sizes;
  for (double nd : ladder_d) {
    RunOptions o = opt;
    o.nx = static_cast<int>(nd);
    if (spec.dim == 2) o.ny = static_cast<int>(nd);
    std::vector<double> l1;
    if (spec.dim == 1) {
      Runner1D r(spec, o);
      r.run();
      l1 = r.error_vs_exact(1);
    } else {
      Runner2D r(spec, o);
      r.run();
      l1 = r.error_vs_exact(1);
    }
    errors.push_back(l1);
    sizes.push_back(static_cast<long>(nd));
    if (!quiet) {
      std::cout << "N=" << nd;
      for (double e : l1) std::cout << "  " << e;
      std::cout << "\n";
    }
  }
  std::string csv = "N";
  for (int c = 0; c < n_comp; ++c)
    csv += ",err" + std::to_string(c) + ",order" + std::to_string(c);
  csv += "\n";
  for (size_t r = 0; r < errors.size(); ++r) {
    csv += std::to_string(sizes[r]);
    for (int c = 0; c < n_comp; ++c) {
      csv += "," + fmt_double(errors[r][c]) + ",";
      if (r > 0)
        csv += fmt_double(std::log2(errors[r - 1][c] / errors[r][c]));
    }
    csv += "\n";
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream(out_dir + "/convergence.csv") << csv;
  }
  if (!quiet) std::cout << csv;
}

void cli_wb_report(const Config& cfg, const std::string& out_dir, bool quiet) {
  ProblemSpec spec = problem_from_config(cfg);
  RunOptions opt = options_from_config(cfg, spec);
  cfg.check_consumed();

  std::vector<double> wb_c, wb_d;
  StepStats stats;
  if (spec.dim == 1) {
    Runner1D r(spec, opt);
    stats = r.run();
    wb_c = r.wb_error(true);
    wb_d = r.wb_error(false);
  } else {
    Runner2D r(spec, opt);
    stats = r.run();
    wb_c = r.wb_error(true);
    wb_d = r.wb_error(false);
  }
  nlohmann::json j = report_json(spec.id, spec.dim, {}, wb_c, wb_d, stats,
                                 std::isnan(opt.t_final)
                                     ? spec.default_t_final
                                     : opt.t_final);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream(out_dir + "/wb_report.json") << j.dump(2) << "\n";
  }
  if (!quiet) std::cout << j.dump(2) << "\n";
}

void cli_list_problems() {
  for (const auto& [id, desc] : list_problems())
    std::cout << id << "  -  " << desc << "\n";
}

}  // namespace cdgrav
