#include "cdgrav/limiter.hpp"

#include <algorithm>
#include <cmath>

#include "cdgrav/quadrature.hpp"

namespace cdgrav {

namespace {
constexpr double kEps = 1e-13;        // admissibility floor
constexpr double kWenoEps = 1e-6;     // smoothness regularization
constexpr double kGammaCenter1 = 0.998, kGammaSide1 = 0.001;   // 1D weights
constexpr double kGammaCenter2 = 0.996, kGammaSide2 = 0.001;   // 2D weights

inline double eval_row(const double* row, const double* coef, int n) {
  double v = 0.0;
  for (int l = 0; l < n; ++l) v += row[l] * coef[l];
  return v;
}
}  // namespace

void LimiterReport::merge(const LimiterReport& o) {
  density_limited += o.density_limited;
  pressure_limited += o.pressure_limited;
  weno_troubled += o.weno_troubled;
  min_theta1 = std::min(min_theta1, o.min_theta1);
  min_theta2 = std::min(min_theta2, o.min_theta2);
  min_rho = std::min(min_rho, o.min_rho);
  min_p = std::min(min_p, o.min_p);
}

double tvb_minmod(const double* a, int n, double m_const, double dx) {
  if (std::abs(a[0]) <= m_const * dx * dx) return a[0];
  bool pos = a[0] > 0.0, neg = a[0] < 0.0;
  double mag = std::abs(a[0]);
  for (int i = 1; i < n; ++i) {
    pos = pos && a[i] > 0.0;
    neg = neg && a[i] < 0.0;
    mag = std::min(mag, std::abs(a[i]));
  }
  if (pos) return mag;
  if (neg) return -mag;
  return 0.0;
}

namespace {

// Shared scaling core: coef points at n_comp blocks of n_coef coefficients,
// bs is the [ns][n_coef] critical-point basis matrix.  n_comp is 3 or 4.
template <int NC>
void pp_limit_cell(double* coef, const double* bs, int ns, int n_coef,
                   double gamma, const char* family, long cell_id,
                   LimiterReport& rep) {
  double avg[NC];
  for (int c = 0; c < NC; ++c) avg[c] = coef[c * n_coef];
  double mom2 = 0.0;
  for (int c = 1; c < NC - 1; ++c) mom2 += avg[c] * avg[c];
  double p_avg = (gamma - 1.0) * (avg[NC - 1] - 0.5 * mom2 / avg[0]);
  if (!(avg[0] > 0.0 && p_avg > 0.0))
    throw PositivityFault(std::string("inadmissible cell average on ") +
                          family + " cell " + std::to_string(cell_id));

  // stage one: density
  double min_rho = avg[0];
  for (int s = 0; s < ns; ++s)
    min_rho = std::min(min_rho, eval_row(bs + s * n_coef, coef, n_coef));
  double eps1 = std::min(kEps, avg[0]);
  if (min_rho < eps1) {
    double th1 = (avg[0] - eps1) / (avg[0] - min_rho);
    for (int l = 1; l < n_coef; ++l) coef[l] *= th1;
    rep.density_limited += 1;
    rep.min_theta1 = std::min(rep.min_theta1, th1);
  }

  // stage two: pressure, with repeat scaling since p is not linear in theta
  double eps2 = std::min(kEps, p_avg);
  double stop = eps2 * (1.0 - 1e-8);
  bool scaled = false;
  for (int rep_it = 0;; ++rep_it) {
    double vals[NC];
    double min_p = p_avg, min_r = avg[0];
    for (int s = 0; s < ns; ++s) {
      const double* row = bs + s * n_coef;
      for (int c = 0; c < NC; ++c)
        vals[c] = eval_row(row, coef + c * n_coef, n_coef);
      double m2 = 0.0;
      for (int c = 1; c < NC - 1; ++c) m2 += vals[c] * vals[c];
      double p = (gamma - 1.0) * (vals[NC - 1] - 0.5 * m2 / vals[0]);
      min_p = std::min(min_p, p);
      min_r = std::min(min_r, vals[0]);
    }
    if (min_p >= stop) {
      rep.min_rho = std::min(rep.min_rho, min_r);
      rep.min_p = std::min(rep.min_p, min_p);
      break;
    }
    if (rep_it == 3) {
      // rounding at extreme energy scales can defeat the scaled floor;
      // the admissible average itself is the guaranteed terminal state
      for (int c = 0; c < NC; ++c)
        for (int l = 1; l < n_coef; ++l) coef[c * n_coef + l] = 0.0;
      if (!scaled) rep.pressure_limited += 1;
      rep.min_theta2 = std::min(rep.min_theta2, 0.0);
      rep.min_rho = std::min(rep.min_rho, avg[0]);
      rep.min_p = std::min(rep.min_p, p_avg);
      break;
    }
    double th2 = (p_avg - eps2) / (p_avg - min_p);
    for (int c = 0; c < NC; ++c)
      for (int l = 1; l < n_coef; ++l) coef[c * n_coef + l] *= th2;
    if (!scaled) rep.pressure_limited += 1;
    scaled = true;
    rep.min_theta2 = std::min(rep.min_theta2, th2);
  }
}

// Lane-parallel variant for the four 2D components: per-lane sums stay
// sequential in l, so values match the scalar path bit for bit.
typedef double v4q __attribute__((vector_size(32), aligned(8)));

template <int NCOEF>
void pp_limit_cell4(double* coef, const double* bs, int ns, double gamma,
                    const char* family, long cell_id, LimiterReport& rep) {
  double avg[4];
  for (int c = 0; c < 4; ++c) avg[c] = coef[c * NCOEF];
  double mom2 = avg[1] * avg[1] + avg[2] * avg[2];
  double p_avg = (gamma - 1.0) * (avg[3] - 0.5 * mom2 / avg[0]);
  if (!(avg[0] > 0.0 && p_avg > 0.0))
    throw PositivityFault(std::string("inadmissible cell average on ") +
                          family + " cell " + std::to_string(cell_id));
  v4q ct[NCOEF];
  for (int l = 0; l < NCOEF; ++l)
    ct[l] = v4q{coef[l], coef[NCOEF + l], coef[2 * NCOEF + l],
                coef[3 * NCOEF + l]};

  double min_rho = avg[0];
  for (int s = 0; s < ns; ++s) {
    const double* row = bs + s * NCOEF;
    double v = 0.0;
    for (int l = 0; l < NCOEF; ++l) v += row[l] * ct[l][0];
    min_rho = std::min(min_rho, v);
  }
  double eps1 = std::min(kEps, avg[0]);
  if (min_rho < eps1) {
    double th1 = (avg[0] - eps1) / (avg[0] - min_rho);
    for (int l = 1; l < NCOEF; ++l) coef[l] *= th1;
    for (int l = 1; l < NCOEF; ++l) ct[l][0] = coef[l];
    rep.density_limited += 1;
    rep.min_theta1 = std::min(rep.min_theta1, th1);
  }

  double eps2 = std::min(kEps, p_avg);
  double stop = eps2 * (1.0 - 1e-8);
  bool scaled = false;
  for (int rep_it = 0;; ++rep_it) {
    double min_p = p_avg, min_r = avg[0];
    for (int s = 0; s < ns; ++s) {
      const double* row = bs + s * NCOEF;
      v4q val = {0.0, 0.0, 0.0, 0.0};
      for (int l = 0; l < NCOEF; ++l) val += row[l] * ct[l];
      double m2 = val[1] * val[1] + val[2] * val[2];
      double p = (gamma - 1.0) * (val[3] - 0.5 * m2 / val[0]);
      min_p = std::min(min_p, p);
      min_r = std::min(min_r, val[0]);
    }
    if (min_p >= stop) {
      rep.min_rho = std::min(rep.min_rho, min_r);
      rep.min_p = std::min(rep.min_p, min_p);
      break;
    }
    if (rep_it == 3) {
      for (int c = 0; c < 4; ++c)
        for (int l = 1; l < NCOEF; ++l) coef[c * NCOEF + l] = 0.0;
      if (!scaled) rep.pressure_limited += 1;
      rep.min_theta2 = std::min(rep.min_theta2, 0.0);
      rep.min_rho = std::min(rep.min_rho, avg[0]);
      rep.min_p = std::min(rep.min_p, p_avg);
      break;
    }
    double th2 = (p_avg - eps2) / (p_avg - min_p);
    for (int c = 0; c < 4; ++c)
      for (int l = 1; l < NCOEF; ++l) coef[c * NCOEF + l] *= th2;
    for (int l = 1; l < NCOEF; ++l)
      ct[l] = v4q{coef[l], coef[NCOEF + l], coef[2 * NCOEF + l],
                  coef[3 * NCOEF + l]};
    if (!scaled) rep.pressure_limited += 1;
    scaled = true;
    rep.min_theta2 = std::min(rep.min_theta2, th2);
  }
}

}  // namespace

void pp_limit(Field1D& u, const SchemeTables1D& t, double gamma,
              LimiterReport* rep) {
  LimiterReport local;
  const char* fam = u.family == MeshFamily::primal ? "primal" : "dual";
  for (int j = 0; j < u.n_cells; ++j)
    pp_limit_cell<3>(u.cell(j), t.BS.data(), t.n_s(), u.n_coef, gamma, fam, j,
                     local);
  if (rep) rep->merge(local);
}

void pp_limit(Field2D& u, const SchemeTables2D& t, double gamma,
              LimiterReport* rep) {
  LimiterReport total;
  const char* fam = u.family == MeshFamily::primal ? "primal" : "dual";
  std::exception_ptr fault;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    LimiterReport local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int j = 0; j < u.ny; ++j)
      for (int i = 0; i < u.nx; ++i) {
        try {
          if (u.n_coef == 6)
            pp_limit_cell4<6>(u.cell(i, j), t.BS.data(), t.n_s(), gamma, fam,
                              static_cast<long>(j) * u.nx + i, local);
          else if (u.n_coef == 10)
            pp_limit_cell4<10>(u.cell(i, j), t.BS.data(), t.n_s(), gamma, fam,
                               static_cast<long>(j) * u.nx + i, local);
          else
            pp_limit_cell<4>(u.cell(i, j), t.BS.data(), t.n_s(), u.n_coef,
                             gamma, fam, static_cast<long>(j) * u.nx + i,
                             local);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (!fault) fault = std::current_exception();
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
    total.merge(local);
  }
  if (fault) std::rethrow_exception(fault);
  if (rep) rep->merge(total);
}

void detect_troubled(const Field1D& u, const Field1D& eq, const TvbParams& tvb,
                     std::vector<std::uint8_t>& mask) {
  int nc = u.n_coef;
  mask.assign(u.n_cells, 0);
  std::vector<double> pc(nc);
  for (int j = 0; j < u.n_cells; ++j) {
    bool bad = false;
    for (int c = 0; c < u.n_comp && !bad; ++c) {
      const double* uc = u.cell(j) + c * nc;
      const double* ec = eq.cell(j) + c * nc;
      for (int l = 0; l < nc; ++l) pc[l] = uc[l] - ec[l];
      double avg = pc[0];
      double avg_w = u.average(j - 1, c) - eq.average(j - 1, c);
      double avg_e = u.average(j + 1, c) - eq.average(j + 1, c);
      double u_r = 0.0, u_l = 0.0;
      for (int l = 1; l < nc; ++l) {
        u_r += pc[l] * Basis1D::phi(l, 1.0);
        u_l += pc[l] * Basis1D::phi(l, -1.0);
      }
      double m_const = tvb.value(c);
      double ar[3] = {u_r, avg_e - avg, avg - avg_w};
      double al[3] = {-u_l, avg_e - avg, avg - avg_w};
      bad = tvb_minmod(ar, 3, m_const, u.dx) != u_r ||
            tvb_minmod(al, 3, m_const, u.dx) != -u_l;
    }
    if (bad) mask[j] = 1;
  }
}

void detect_troubled(const Field2D& u, const Field2D& eq, const TvbParams& tvb,
                     std::vector<std::uint8_t>& mask) {
  int nc = u.n_coef;
  int k = 0;
  while ((k + 1) * (k + 2) / 2 < nc) ++k;
  mask.assign(static_cast<size_t>(u.nx) * u.ny, 0);
  // indices of the pure-x and pure-y moments
  int ax[4] = {-1, -1, -1, -1}, ay[4] = {-1, -1, -1, -1};
  for (int l = 0; l < nc; ++l) {
    auto [a, b] = Basis2D::pair(l);
    if (b == 0) ax[a] = l;
    if (a == 0) ay[b] = l;
  }
  for (int j = 0; j < u.ny; ++j)
    for (int i = 0; i < u.nx; ++i) {
      bool bad = false;
      for (int c = 0; c < u.n_comp && !bad; ++c) {
        auto pert_avg = [&](int ii, int jj) {
          return u.average(ii, jj, c) - eq.average(ii, jj, c);
        };
        const double* uc = u.cell(i, j) + c * nc;
        const double* ec = eq.cell(i, j) + c * nc;
        double avg = uc[0] - ec[0];
        double m_const = tvb.value(c);
        // x-direction on the y-averaged polynomial
        {
          double u_r = 0.0, u_l = 0.0;
          for (int a = 1; a <= k; ++a)
            if (ax[a] >= 0) {
              double q = uc[ax[a]] - ec[ax[a]];
              u_r += q * Basis1D::phi(a, 1.0);
              u_l += q * Basis1D::phi(a, -1.0);
            }
          double de = pert_avg(i + 1, j) - avg, dw = avg - pert_avg(i - 1, j);
          double ar[3] = {u_r, de, dw}, al[3] = {-u_l, de, dw};
          bad = tvb_minmod(ar, 3, m_const, u.dx) != u_r ||
                tvb_minmod(al, 3, m_const, u.dx) != -u_l;
        }
        // y-direction on the x-averaged polynomial
        if (!bad) {
          double u_t = 0.0, u_b = 0.0;
          for (int b = 1; b <= k; ++b)
            if (ay[b] >= 0) {
              double q = uc[ay[b]] - ec[ay[b]];
              u_t += q * Basis1D::phi(b, 1.0);
              u_b += q * Basis1D::phi(b, -1.0);
            }
          double dn = pert_avg(i, j + 1) - avg, ds = avg - pert_avg(i, j - 1);
          double at[3] = {u_t, dn, ds}, ab[3] = {-u_b, dn, ds};
          bad = tvb_minmod(at, 3, m_const, u.dy) != u_t ||
                tvb_minmod(ab, 3, m_const, u.dy) != -u_b;
        }
      }
      if (bad) mask[static_cast<size_t>(j) * u.nx + i] = 1;
    }
}

namespace {

// 4-point Gauss data for the smoothness indicators.
struct BetaRule {
  double x[4], w[4];
  BetaRule() {
    QuadRule g = gauss_rule_ref(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = g.nodes[i];
      w[i] = g.weights[i];
    }
  }
};
const BetaRule& beta_rule() {
  static BetaRule r;
  return r;
}

// Mirror-safe sum of first and second derivative squares of a 1D candidate.
double beta_1d(const double* q, int ncoef) {
  const BetaRule& r = beta_rule();
  double t[4];
  for (int i = 0; i < 4; ++i) {
    double d1 = 0.0, d2 = 0.0;
    for (int l = 1; l < ncoef; ++l) {
      d1 += q[l] * Basis1D::dphi(l, r.x[i]);
      d2 += q[l] * Basis1D::d2phi(l, r.x[i]);
    }
    t[i] = r.w[i] * (d1 * d1 + d2 * d2);
  }
  return (t[0] + t[3]) + (t[1] + t[2]);
}

double beta_2d(const double* q, int ncoef) {
  const BetaRule& r = beta_rule();
  double acc = 0.0;
  for (int px = 0; px < 2; ++px) {
    double pair = 0.0;
    for (int side = 0; side < 2; ++side) {
      int ix = side == 0 ? px : 3 - px;
      double part = 0.0;
      for (int iy = 0; iy < 4; ++iy) {
        double dx1 = 0, dy1 = 0, dxx = 0, dxy = 0, dyy = 0;
        for (int l = 1; l < ncoef; ++l) {
          auto [a, b] = Basis2D::pair(l);
          double fa = Basis1D::phi(a, r.x[ix]), fb = Basis1D::phi(b, r.x[iy]);
          double da = Basis1D::dphi(a, r.x[ix]), db = Basis1D::dphi(b, r.x[iy]);
          dx1 += q[l] * da * fb;
          dy1 += q[l] * fa * db;
          dxx += q[l] * Basis1D::d2phi(a, r.x[ix]) * fb;
          dxy += q[l] * da * db;
          dyy += q[l] * fa * Basis1D::d2phi(b, r.x[iy]);
        }
        part += r.w[ix] * r.w[iy] *
                (dx1 * dx1 + dy1 * dy1 + dxx * dxx + dxy * dxy + dyy * dyy);
      }
      pair = side == 0 ? part : pair + part;
    }
    acc += pair;
  }
  return acc;
}

}  // namespace

void euler_eig_1d(const State1& u, double gamma, double* left, double* right) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw PositivityFault("characteristic decomposition at inadmissible state");
  double vel = u.m / u.rho;
  double c = std::sqrt(gamma * p / u.rho);
  double H = (u.E + p) / u.rho;
  double b1 = (gamma - 1.0) / (c * c);
  double b2 = 0.5 * b1 * vel * vel;
  const double R[9] = {1, 1, 1, vel - c, vel, vel + c,
                       H - vel * c, 0.5 * vel * vel, H + vel * c};
  const double L[9] = {0.5 * (b2 + vel / c), -0.5 * (b1 * vel + 1.0 / c),
                       0.5 * b1, 1.0 - b2, b1 * vel, -b1,
                       0.5 * (b2 - vel / c), -0.5 * (b1 * vel - 1.0 / c),
                       0.5 * b1};
  std::copy(R, R + 9, right);
  std::copy(L, L + 9, left);
}

void euler_eig_x_2d(const State2& u, double gamma, double* left,
                    double* right) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw PositivityFault("characteristic decomposition at inadmissible state");
  double vx = u.m1 / u.rho, vy = u.m2 / u.rho;
  double c = std::sqrt(gamma * p / u.rho);
  double H = (u.E + p) / u.rho;
  double q2 = vx * vx + vy * vy;
  double b1 = (gamma - 1.0) / (c * c);
  double b2 = 0.5 * b1 * q2;
  const double R[16] = {1, 1, 0, 1,
                        vx - c, vx, 0, vx + c,
                        vy, vy, 1, vy,
                        H - vx * c, 0.5 * q2, vy, H + vx * c};
  const double L[16] = {
      0.5 * (b2 + vx / c), -0.5 * (b1 * vx + 1.0 / c), -0.5 * b1 * vy, 0.5 * b1,
      1.0 - b2, b1 * vx, b1 * vy, -b1,
      -vy, 0, 1, 0,
      0.5 * (b2 - vx / c), -0.5 * (b1 * vx - 1.0 / c), -0.5 * b1 * vy, 0.5 * b1};
  std::copy(R, R + 16, right);
  std::copy(L, L + 16, left);
}

void euler_eig_y_2d(const State2& u, double gamma, double* left,
                    double* right) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw PositivityFault("characteristic decomposition at inadmissible state");
  double vx = u.m1 / u.rho, vy = u.m2 / u.rho;
  double c = std::sqrt(gamma * p / u.rho);
  double H = (u.E + p) / u.rho;
  double q2 = vx * vx + vy * vy;
  double b1 = (gamma - 1.0) / (c * c);
  double b2 = 0.5 * b1 * q2;
  const double R[16] = {1, 1, 0, 1,
                        vx, vx, 1, vx,
                        vy - c, vy, 0, vy + c,
                        H - vy * c, 0.5 * q2, vx, H + vy * c};
  const double L[16] = {
      0.5 * (b2 + vy / c), -0.5 * b1 * vx, -0.5 * (b1 * vy + 1.0 / c), 0.5 * b1,
      1.0 - b2, b1 * vx, b1 * vy, -b1,
      -vx, 1, 0, 0,
      0.5 * (b2 - vy / c), -0.5 * b1 * vx, -0.5 * (b1 * vy - 1.0 / c), 0.5 * b1};
  std::copy(R, R + 16, right);
  std::copy(L, L + 16, left);
}

void weno_limit(Field1D& u, const Field1D& eq, const SchemeTables1D& t,
                double gamma, const std::vector<std::uint8_t>& mask) {
  int nc = u.n_coef;
  if (nc < 2) return;
  std::vector<double> work(9 * nc);
  for (int j = 0; j < u.n_cells; ++j) {
    if (!mask[j]) continue;
    State1 avg{u.average(j, 0), u.average(j, 1), u.average(j, 2)};
    double L[9], R[9];
    euler_eig_1d(avg, gamma, L, R);
    // characteristic perturbation coefficients of cells j-1, j, j+1
    double* V = work.data();  // [3 cells][nc][3 fields]
    for (int x = 0; x < 3; ++x) {
      const double* uc = u.cell(j - 1 + x);
      const double* ec = eq.cell(j - 1 + x);
      for (int l = 0; l < nc; ++l)
        for (int f = 0; f < 3; ++f) {
          double v = 0.0;
          for (int c = 0; c < 3; ++c)
            v += L[f * 3 + c] * (uc[c * nc + l] - ec[c * nc + l]);
          V[(x * nc + l) * 3 + f] = v;
        }
    }
    for (int f = 0; f < 3; ++f) {
      double qW[4] = {0, 0, 0, 0}, qC[4] = {0, 0, 0, 0}, qE[4] = {0, 0, 0, 0};
      for (int m = 0; m < nc; ++m) {
        for (int l = 0; l < nc; ++l) {
          qW[m] += t.Tp[m * nc + l] * V[(0 * nc + l) * 3 + f];
          qE[m] += t.Tm[m * nc + l] * V[(2 * nc + l) * 3 + f];
        }
        qC[m] = V[(1 * nc + m) * 3 + f];
      }
      qW[0] = qC[0];
      qE[0] = qC[0];
      double bW = beta_1d(qW, nc), bC = beta_1d(qC, nc), bE = beta_1d(qE, nc);
      double aW = kGammaSide1 / ((kWenoEps + bW) * (kWenoEps + bW));
      double aC = kGammaCenter1 / ((kWenoEps + bC) * (kWenoEps + bC));
      double aE = kGammaSide1 / ((kWenoEps + bE) * (kWenoEps + bE));
      double inv = 1.0 / (aC + (aW + aE));
      double wW = aW * inv, wC = aC * inv, wE = aE * inv;
      for (int l = 1; l < nc; ++l)
        V[(1 * nc + l) * 3 + f] = wC * qC[l] + (wW * qW[l] + wE * qE[l]);
    }
    double* uc = u.cell(j);
    const double* ec = eq.cell(j);
    // acoustic fields swap under reflection: pair them in the sum
    for (int l = 1; l < nc; ++l)
      for (int c = 0; c < 3; ++c) {
        const double* vl = V + (1 * nc + l) * 3;
        double v = (R[c * 3 + 0] * vl[0] + R[c * 3 + 2] * vl[2]) +
                   R[c * 3 + 1] * vl[1];
        uc[c * nc + l] = ec[c * nc + l] + v;
      }
  }
}

void weno_limit(Field2D& u, const Field2D& eq, const SchemeTables2D& t,
                double gamma, const std::vector<std::uint8_t>& mask) {
  int nc = u.n_coef;
  if (nc < 3) return;
  const SchemeTables1D& t1 = t.t1;
  int nc1 = t1.ncoef;
  // index helpers for shifting along one direction
  int idx_of[4][4];
  for (auto& row : idx_of) std::fill(row, row + 4, -1);
  for (int l = 0; l < nc; ++l) {
    auto [a, b] = Basis2D::pair(l);
    idx_of[a][b] = l;
  }
  auto shift_dir = [&](const double* src, bool xdir, bool plus, double* dst) {
    const std::vector<double>& T = plus ? t1.Tp : t1.Tm;
    for (int l = 0; l < nc; ++l) dst[l] = 0.0;
    for (int l = 0; l < nc; ++l) {
      auto [a, b] = Basis2D::pair(l);
      int run = xdir ? a : b;
      for (int m = 0; m <= run; ++m) {
        int target = xdir ? idx_of[m][b] : idx_of[a][m];
        if (target >= 0) dst[target] += T[m * nc1 + run] * src[l];
      }
    }
  };

  std::vector<double> pert(5 * 4 * nc);   // five stencil cells, conservative
  std::vector<double> cf(5 * nc);         // one characteristic field at a time
  std::vector<double> cand(5 * nc);       // shifted candidates
  std::vector<double> outx(4 * nc), outy(4 * nc);

  for (int j = 0; j < u.ny; ++j)
    for (int i = 0; i < u.nx; ++i) {
      if (!mask[static_cast<size_t>(j) * u.nx + i]) continue;
      State2 avg{u.average(i, j, 0), u.average(i, j, 1), u.average(i, j, 2),
                 u.average(i, j, 3)};
      const int di[5] = {0, -1, 1, 0, 0};
      const int dj[5] = {0, 0, 0, -1, 1};
      for (int s = 0; s < 5; ++s) {
        const double* uc = u.cell(i + di[s], j + dj[s]);
        const double* ec = eq.cell(i + di[s], j + dj[s]);
        for (int c = 0; c < 4; ++c)
          for (int l = 0; l < nc; ++l)
            pert[(s * 4 + c) * nc + l] = uc[c * nc + l] - ec[c * nc + l];
      }
      for (int pass = 0; pass < 2; ++pass) {
        double L[16], R[16];
        if (pass == 0)
          euler_eig_x_2d(avg, gamma, L, R);
        else
          euler_eig_y_2d(avg, gamma, L, R);
        double* out = pass == 0 ? outx.data() : outy.data();
        std::vector<double> vlim(4 * nc, 0.0);
        for (int f = 0; f < 4; ++f) {
          for (int s = 0; s < 5; ++s)
            for (int l = 0; l < nc; ++l) {
              double v = 0.0;
              for (int c = 0; c < 4; ++c)
                v += L[f * 4 + c] * pert[(s * 4 + c) * nc + l];
              cf[s * nc + l] = v;
            }
          // candidates: center plus the four shifted neighbors
          for (int l = 0; l < nc; ++l) cand[0 * nc + l] = cf[0 * nc + l];
          shift_dir(cf.data() + 1 * nc, true, true, cand.data() + 1 * nc);   // W
          shift_dir(cf.data() + 2 * nc, true, false, cand.data() + 2 * nc);  // E
          shift_dir(cf.data() + 3 * nc, false, true, cand.data() + 3 * nc);  // S
          shift_dir(cf.data() + 4 * nc, false, false, cand.data() + 4 * nc); // N
          for (int s = 1; s < 5; ++s) cand[s * nc] = cand[0];
          double beta[5], aw[5];
          for (int s = 0; s < 5; ++s) beta[s] = beta_2d(&cand[s * nc], nc);
          for (int s = 0; s < 5; ++s) {
            double g = s == 0 ? kGammaCenter2 : kGammaSide2;
            aw[s] = g / ((kWenoEps + beta[s]) * (kWenoEps + beta[s]));
          }
          double inv = 1.0 / (aw[0] + (aw[1] + aw[2]) + (aw[3] + aw[4]));
          for (int l = 1; l < nc; ++l) {
            double v = aw[0] * cand[0 * nc + l] +
                       (aw[1] * cand[1 * nc + l] + aw[2] * cand[2 * nc + l]) +
                       (aw[3] * cand[3 * nc + l] + aw[4] * cand[4 * nc + l]);
            vlim[f * nc + l] = v * inv;
          }
        }
        // acoustic fields swap under reflection: pair 0 with 3
        for (int c = 0; c < 4; ++c)
          for (int l = 1; l < nc; ++l)
            out[c * nc + l] =
                (R[c * 4 + 0] * vlim[0 * nc + l] +
                 R[c * 4 + 3] * vlim[3 * nc + l]) +
                (R[c * 4 + 1] * vlim[1 * nc + l] +
                 R[c * 4 + 2] * vlim[2 * nc + l]);
      }
      double* uc = u.cell(i, j);
      const double* ec = eq.cell(i, j);
      for (int c = 0; c < 4; ++c)
        for (int l = 1; l < nc; ++l)
          uc[c * nc + l] =
              ec[c * nc + l] +
              0.5 * (outx[c * nc + l] + outy[c * nc + l]);
    }
}

}  // namespace cdgrav
