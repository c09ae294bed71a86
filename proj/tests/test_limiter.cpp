#include <doctest.h>

#include <cmath>
#include <random>

#include "cdgrav/limiter.hpp"
#include "cdgrav/problems.hpp"
#include "cdgrav/run.hpp"

using namespace cdgrav;

TEST_CASE("tvb corrected minmod") {
  double a1[3] = {0.001, -5.0, 7.0};
  CHECK(tvb_minmod(a1, 3, 10.0, 0.1) == 0.001);  // |a1| <= M dx^2
  double a2[3] = {3.0, 1.0, 2.0};
  CHECK(tvb_minmod(a2, 3, 0.0, 0.1) == 1.0);
  double a3[3] = {3.0, -1.0, 2.0};
  CHECK(tvb_minmod(a3, 3, 0.0, 0.1) == 0.0);
  double a4[3] = {-3.0, -1.0, -2.0};
  CHECK(tvb_minmod(a4, 3, 0.0, 0.1) == -1.0);
}

namespace {

Field1D small_field(int k) {
  Mesh1D m(0.0, 1.0, 4);
  Field1D f;
  f.resize(MeshFamily::primal, m, 1, 3, k + 1);
  for (int j = 0; j < f.n_cells; ++j) {
    double* c = f.cell(j);
    c[0] = 1.0;             // rho
    c[2 * (k + 1)] = 2.5;   // E
  }
  return f;
}

}  // namespace

TEST_CASE("positivity limiter: admissible fields pass through unchanged") {
  SchemeTables1D t = make_tables_1d(2);
  Field1D f = small_field(2);
  f.cell(1)[1] = 0.2;  // mild slope, still positive
  Field1D copy = f;
  LimiterReport rep;
  pp_limit(f, t, 1.4, &rep);
  CHECK(rep.density_limited == 0);
  CHECK(rep.pressure_limited == 0);
  CHECK(f.a == copy.a);
}

TEST_CASE("positivity limiter: density scaling factor") {
  SchemeTables1D t = make_tables_1d(2);
  Field1D f = small_field(2);
  // rho(xi) = 1 + 1.5 xi has minimum -0.5 at xi = -1
  f.cell(2)[1] = 1.5;
  f.cell(2)[2 * 3] = 40.0;  // keep the pressure comfortably positive
  LimiterReport rep;
  pp_limit(f, t, 1.4, &rep);
  CHECK(rep.density_limited == 1);
  double want = (1.0 - 1e-13) / 1.5;
  CHECK(rep.min_theta1 == doctest::Approx(want).epsilon(1e-12));
  CHECK(f.average(2, 0) == 1.0);  // average untouched
}

TEST_CASE("positivity limiter: randomized violating fields become admissible") {
  SchemeTables1D t = make_tables_1d(2);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Field1D f = small_field(2);
    for (int j = 0; j < f.n_cells; ++j) {
      double* c = f.cell(j);
      c[0] = 0.5 + 0.5 * std::abs(u(rng));
      c[1] = u(rng);
      c[2] = u(rng);
      c[3] = 0.4 * u(rng);
      c[4] = u(rng);
      c[5] = u(rng);
      c[6] = 1.0 + std::abs(u(rng));
      c[7] = 2.0 * u(rng);
      c[8] = u(rng);
    }
    // force admissible averages
    for (int j = 0; j < f.n_cells; ++j) {
      double* c = f.cell(j);
      double p = 0.4 * (c[6] - 0.5 * c[3] * c[3] / c[0]);
      if (!(p > 0.0)) c[6] = 0.5 * c[3] * c[3] / c[0] + 1.0;
    }
    LimiterReport rep;
    pp_limit(f, t, 1.4, &rep);
    for (int j = 0; j < f.n_cells; ++j)
      for (int s = 0; s < t.n_s(); ++s) {
        double rho = 0.0, mm = 0.0, en = 0.0;
        for (int l = 0; l < 3; ++l) {
          rho += f.cell(j)[l] * t.BS[s * 3 + l];
          mm += f.cell(j)[3 + l] * t.BS[s * 3 + l];
          en += f.cell(j)[6 + l] * t.BS[s * 3 + l];
        }
        double p = 0.4 * (en - 0.5 * mm * mm / rho);
        CHECK(rho >= 1e-13 * (1.0 - 1e-12));
        CHECK(p >= 1e-13 * (1.0 - 1e-8) - 1e-30);
      }
    // idempotence: a second pass does nothing
    Field1D g = f;
    LimiterReport rep2;
    pp_limit(f, t, 1.4, &rep2);
    CHECK(rep2.density_limited == 0);
    CHECK(rep2.pressure_limited == 0);
    CHECK(f.a == g.a);
  }
}

TEST_CASE("positivity limiter faults on an inadmissible average") {
  SchemeTables1D t = make_tables_1d(2);
  Field1D f = small_field(2);
  f.cell(1)[0] = -0.5;
  CHECK_THROWS_AS(pp_limit(f, t, 1.4, nullptr), PositivityFault);
}

TEST_CASE("characteristic matrices invert each other") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    State1 s{1.0 + std::abs(u(rng)), u(rng), 0.0};
    s.E = pressure(State1{s.rho, s.m, 3.0}, 1.4) > 0 ? 3.0 : 5.0;
    double L[9], R[9];
    euler_eig_1d(s, 1.4, L, R);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = 0.0;
        for (int f = 0; f < 3; ++f) v += L[i * 3 + f] * R[f * 3 + j];
        CHECK(v == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
      }
    State2 s2{1.0 + std::abs(u(rng)), u(rng), u(rng), 6.0};
    double L2[16], R2[16];
    for (int dir = 0; dir < 2; ++dir) {
      if (dir == 0)
        euler_eig_x_2d(s2, 1.4, L2, R2);
      else
        euler_eig_y_2d(s2, 1.4, L2, R2);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          double v = 0.0;
          for (int f = 0; f < 4; ++f) v += L2[i * 4 + f] * R2[f * 4 + j];
          CHECK(v == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
    }
  }
}

namespace {

RunOptions wb_opts(int nx) {
  RunOptions opt;
  opt.k = 2;
  opt.nx = nx;
  return opt;
}

}  // namespace

TEST_CASE("troubled-cell detection on the perturbation") {
  RunOptions opt = wb_opts(20);
  Runner1D r(make_problem("ex2_isothermal_1d"), opt);
  TvbParams tvb;  // M = 0, most aggressive
  std::vector<std::uint8_t> mask;

  // projected equilibrium: nothing is flagged
  detect_troubled(r.state().C, r.equilibrium().C, tvb, mask);
  for (auto m : mask) CHECK(m == 0);

  // a tiny smooth perturbation below M dx^2 is also quiet
  TvbParams loose;
  loose.m = {50.0, 50.0, 50.0};
  Runner1D r2(make_problem("ex2_isothermal_1d"), opt);
  for (int j = 0; j < r2.mesh().nx; ++j)
    r2.state().C.cell(j)[1] += 1e-9;
  LimiterReport rep;
  prepare_pair(r2.system(), r2.state(), 0.0, &rep);
  detect_troubled(r2.state().C, r2.equilibrium().C, loose, mask);
  for (auto m : mask) CHECK(m == 0);

  // a sharp kink in one cell flags at most a 3-cell neighborhood around it
  Runner1D r3(make_problem("ex2_isothermal_1d"), opt);
  int hit = 10;
  r3.state().C.cell(hit)[1] += 0.2;  // overshooting slope
  LimiterReport rep3;
  prepare_pair(r3.system(), r3.state(), 0.0, &rep3);
  detect_troubled(r3.state().C, r3.equilibrium().C, tvb, mask);
  CHECK(mask[hit] == 1);
  for (int j = 0; j < r3.mesh().nx; ++j)
    if (std::abs(j - hit) > 1) CHECK(mask[j] == 0);
}

TEST_CASE("weno rebuild: identity off the mask and at the steady state") {
  RunOptions opt = wb_opts(16);
  Runner1D r(make_problem("ex2_isothermal_1d"), opt);
  std::vector<std::uint8_t> mask(r.mesh().nx, 0);
  Field1D before = r.state().C;
  weno_limit(r.state().C, r.equilibrium().C, r.tables(), r.spec().gas.gamma,
             mask);
  CHECK(r.state().C.a == before.a);

  // steady state in, steady state out even with every cell flagged
  std::fill(mask.begin(), mask.end(), 1);
  weno_limit(r.state().C, r.equilibrium().C, r.tables(), r.spec().gas.gamma,
             mask);
  for (int j = 0; j < r.mesh().nx; ++j)
    for (int i = 0; i < 3 * r.tables().ncoef; ++i)
      CHECK(r.state().C.cell(j)[i] ==
            doctest::Approx(before.cell(j)[i]).epsilon(1e-13));
}

TEST_CASE("weno rebuild tames a step without touching the averages") {
  // flat equilibrium, zero gravity; a one-cell jump with a wild slope
  ProblemSpec s;
  s.id = "weno_step";
  s.dim = 1;
  s.x_min = 0;
  s.x_max = 1;
  s.gas.gamma = 1.4;
  s.grav1 = {[](double) { return 0.0; }, [](double) { return 0.0; }};
  s.eq1 = isothermal_profile(1.0, 1.0, s.grav1);
  s.init1 = [](double x) {
    return State1{x < 0.5 ? 1.0 : 2.0, 0.0, 4.0};
  };
  s.bc1 = {BcKind::outflow, BcKind::outflow, {}};
  s.default_nx = 10;
  s.default_t_final = 1.0;
  RunOptions opt = wb_opts(10);
  Runner1D r(s, opt);
  int jc = 5;
  double* c = r.state().C.cell(jc);
  c[1] = 1.5;  // overshooting slope
  LimiterReport rep;
  prepare_pair(r.system(), r.state(), 0.0, &rep);
  std::vector<double> avg_before(r.mesh().nx);
  for (int j = 0; j < r.mesh().nx; ++j)
    avg_before[j] = r.state().C.average(j, 0);
  std::vector<std::uint8_t> mask;
  TvbParams tvb;
  detect_troubled(r.state().C, r.equilibrium().C, tvb, mask);
  CHECK(mask[jc] == 1);
  weno_limit(r.state().C, r.equilibrium().C, r.tables(), 1.4, mask);
  for (int j = 0; j < r.mesh().nx; ++j)
    CHECK(r.state().C.average(j, 0) ==
          doctest::Approx(avg_before[j]).epsilon(1e-14));
  // rebuilt endpoint values stay between the neighboring averages
  double lo = std::min(avg_before[jc - 1], avg_before[jc + 1]) - 1e-8;
  double hi = std::max(avg_before[jc - 1], avg_before[jc + 1]) + 1e-8;
  double left = r.state().C.eval(jc, 0, -1.0);
  double right = r.state().C.eval(jc, 0, 1.0);
  CHECK(left >= lo);
  CHECK(left <= hi);
  CHECK(right >= lo);
  CHECK(right <= hi);
}
