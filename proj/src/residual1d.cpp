#include "cdgrav/residual1d.hpp"

#include <algorithm>
#include <cmath>

#include "cdgrav/limiter.hpp"

namespace cdgrav {

namespace {

constexpr int kMaxPts = 16;  // 2N with N <= 8
constexpr int kMaxCoef = 4;

struct CellEval1D {
  // values at the 2N volume Gauss points
  double own[3][kMaxPts];
  double opp[3][kMaxPts];
  double eq_own[3][kMaxPts];
  double eq_opp[3][kMaxPts];
  double dps[kMaxPts];      // d/dxi of the opposite p^s (reference coords)
  double dphi[kMaxPts];     // d/dxi of the projected potential (non-WB)
  double opp_iface[3][2];   // opposite state at my interfaces
  double avg_opp[3];        // opposite-field averages over my cell
};

inline void eval_block(const double* coef, const double* rows, int npts,
                       int nc, double* out) {
  for (int q = 0; q < npts; ++q) {
    double v = 0.0;
    const double* row = rows + q * nc;
    for (int l = 0; l < nc; ++l) v += row[l] * coef[l];
    out[q] = v;
  }
}

void eval_cell(const FamilyArgs1D& fa, const SchemeTables1D& t, int j,
               CellEval1D& e) {
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  const double* co = fa.own->cell(j);
  const double* ceo = fa.eq_own->cell(j);
  const double* cl = fa.opp->cell(j + fa.opp_left);
  const double* cr = fa.opp->cell(j + fa.opp_left + 1);
  const double* cel = fa.eq_opp->cell(j + fa.opp_left);
  const double* cer = fa.eq_opp->cell(j + fa.opp_left + 1);
  double gm1 = fa.gamma - 1.0;
  for (int c = 0; c < 3; ++c) {
    eval_block(co + c * nc, t.B.data(), n2, nc, e.own[c]);
    eval_block(ceo + c * nc, t.B.data(), n2, nc, e.eq_own[c]);
    eval_block(cl + c * nc, t.Bopp.data(), t.N, nc, e.opp[c]);
    eval_block(cr + c * nc, t.Bopp.data() + t.N * nc, t.N, nc, e.opp[c] + t.N);
    eval_block(cel + c * nc, t.Bopp.data(), t.N, nc, e.eq_opp[c]);
    eval_block(cer + c * nc, t.Bopp.data() + t.N * nc, t.N, nc,
               e.eq_opp[c] + t.N);
    for (int side = 0; side < 2; ++side) {
      const double* cc = side == 0 ? cl : cr;
      double v = 0.0;
      for (int l = 0; l < nc; ++l) v += t.Bctr[l] * cc[c * nc + l];
      e.opp_iface[c][side] = v;
    }
  }
  // reference-coordinate derivative of the opposite equilibrium pressure
  {
    double tmp[kMaxPts];
    eval_block(cel + 2 * nc, t.Boppx.data(), t.N, nc, tmp);
    eval_block(cer + 2 * nc, t.Boppx.data() + t.N * nc, t.N, nc, tmp + t.N);
    for (int q = 0; q < n2; ++q) e.dps[q] = gm1 * tmp[q];
  }
  if (!fa.well_balanced && fa.phi_opp) {
    const double* pl = fa.phi_opp->cell(j + fa.opp_left);
    const double* pr = fa.phi_opp->cell(j + fa.opp_left + 1);
    eval_block(pl, t.Boppx.data(), t.N, nc, e.dphi);
    eval_block(pr, t.Boppx.data() + t.N * nc, t.N, nc, e.dphi + t.N);
  }
  // opposite-field averages over my cell, mirror-paired like the eq caches
  for (int c = 0; c < 3; ++c) {
    double acc = 0.0;
    for (int q = 0; q < t.N; ++q) {
      int qr = n2 - 1 - q;
      acc += t.gw[q] * e.opp[c][q] + t.gw[qr] * e.opp[c][qr];
    }
    e.avg_opp[c] = 0.5 * acc;
  }
}

inline void flux3(double rho, double m, double en, double gamma, double* f) {
  double vel = m / rho;
  double p = (gamma - 1.0) * (en - 0.5 * m * m / rho);
  f[0] = m;
  f[1] = m * vel + p;
  f[2] = (en + p) * vel;
}

// One cell of the fused dissipation + flux + source assembly.  Accumulators
// are exactly zero at the projected equilibrium because every point and
// interface term pairs a flux value with its source counterpart.
void assemble_cell(const FamilyArgs1D& fa, const SchemeTables1D& t, int j,
                   const CellEval1D& e, double* out) {
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  double gm1 = fa.gamma - 1.0;
  double dx = fa.own->dx;
  double half_dx_tau = 0.5 * dx * fa.inv_tau;
  const EqCache1D& cache = (*fa.cache)[j];
  double rbar_rho = 0.0, rbar_m = 0.0;
  if (fa.well_balanced) {
    rbar_rho = e.avg_opp[0] / cache.rho_avg_opp;
    rbar_m = e.avg_opp[1] / cache.rho_avg_opp;
  }

  double acc[3][kMaxCoef];
  double stash[3][kMaxCoef];
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l) acc[c][l] = 0.0;

  // mirror pairs (qp, 2N-1-qp) are accumulated together so a reflected cell
  // produces bit-identical moments
  for (int qp = 0; qp < t.N; ++qp) {
    for (int side = 0; side < 2; ++side) {
      int q = side == 0 ? qp : n2 - 1 - qp;
      double w = t.gw[q];
      double f[3];
      flux3(e.opp[0][q], e.opp[1][q], e.opp[2][q], fa.gamma, f);
      double gv[3], gx[3];
      if (fa.well_balanced) {
        double ps = gm1 * e.eq_opp[2][q];
        double rho_s = e.eq_opp[0][q];
        double rd_rho = e.opp[0][q] / rho_s - rbar_rho;
        double rd_m = e.opp[1][q] / rho_s - rbar_m;
        for (int c = 0; c < 3; ++c) {
          double diss = (e.opp[c][q] - e.own[c][q]) +
                        (e.eq_own[c][q] - e.eq_opp[c][q]);
          gv[c] = half_dx_tau * diss;
        }
        gv[1] += rd_rho * e.dps[q];
        gv[2] += rd_m * e.dps[q];
        gx[0] = f[0];
        gx[1] = f[1] - rbar_rho * ps;
        gx[2] = f[2] - rbar_m * ps;
      } else {
        double px = e.dphi[q] * 2.0 / dx;
        for (int c = 0; c < 3; ++c) {
          gv[c] = half_dx_tau * (e.opp[c][q] - e.own[c][q]);
          gx[c] = f[c];
        }
        gv[1] += -0.5 * dx * e.opp[0][q] * px;
        gv[2] += -0.5 * dx * e.opp[1][q] * px;
      }
      const double* bv = &t.B[q * nc];
      const double* bx = &t.Bx[q * nc];
      if (side == 0) {
        for (int c = 0; c < 3; ++c)
          for (int l = 0; l < nc; ++l)
            stash[c][l] = w * (gv[c] * bv[l] + gx[c] * bx[l]);
      } else {
        for (int c = 0; c < 3; ++c)
          for (int l = 0; l < nc; ++l) {
            double now = w * (gv[c] * bv[l] + gx[c] * bx[l]);
            acc[c][l] += stash[c][l] + now;
          }
      }
    }
  }
  // interface terms, fused with the source boundary part
  {
    double fl[3], fr[3];
    flux3(e.opp_iface[0][0], e.opp_iface[1][0], e.opp_iface[2][0], fa.gamma,
          fl);
    flux3(e.opp_iface[0][1], e.opp_iface[1][1], e.opp_iface[2][1], fa.gamma,
          fr);
    double sl[3] = {0, 0, 0}, sr[3] = {0, 0, 0};
    if (fa.well_balanced) {
      sl[1] = rbar_rho * cache.ps_iface[0];
      sl[2] = rbar_m * cache.ps_iface[0];
      sr[1] = rbar_rho * cache.ps_iface[1];
      sr[2] = rbar_m * cache.ps_iface[1];
    }
    for (int c = 0; c < 3; ++c) {
      double tr = -fr[c] + sr[c];
      double tl = fl[c] - sl[c];
      for (int l = 0; l < nc; ++l)
        acc[c][l] += tr * t.Bright[l] + tl * t.Bleft[l];
    }
  }
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l)
      out[c * nc + l] = acc[c][l] / (dx * Basis1D::cnorm(l));
}

}  // namespace

void assemble_rhs_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                     Field1D& dudt) {
  if (2 * t.N > kMaxPts) throw std::invalid_argument("quadrature too large");
  CellEval1D e;
  for (int j = 0; j < fa.own->n_cells; ++j) {
    eval_cell(fa, t, j, e);
    assemble_cell(fa, t, j, e, dudt.cell(j));
  }
}

void cell_average_rhs_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                         std::vector<State1>& davg) {
  // direct evaluation of the average equation: dissipation average, interface
  // flux difference, and <S,1>; deliberately not sharing the fused path
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  double gm1 = fa.gamma - 1.0;
  double dx = fa.own->dx;
  davg.assign(fa.own->n_cells, State1{0, 0, 0});
  CellEval1D e;
  for (int j = 0; j < fa.own->n_cells; ++j) {
    eval_cell(fa, t, j, e);
    const EqCache1D& cache = (*fa.cache)[j];
    double s[3] = {0, 0, 0};
    double rbar_rho = e.avg_opp[0] / cache.rho_avg_opp;
    double rbar_m = e.avg_opp[1] / cache.rho_avg_opp;
    double diss[3];
    for (int c = 0; c < 3; ++c) {
      // averages of own and equilibrium fields are the zeroth coefficients
      double own_avg = fa.own->average(j, c);
      double eq_own_avg = fa.eq_own->average(j, c);
      double eq_opp_avg = 0.0;
      {
        double acc = 0.0;
        for (int q = 0; q < t.N; ++q) {
          int qr = n2 - 1 - q;
          acc += t.gw[q] * e.eq_opp[c][q] + t.gw[qr] * e.eq_opp[c][qr];
        }
        eq_opp_avg = 0.5 * acc;
      }
      diss[c] = fa.well_balanced
                    ? fa.inv_tau *
                          ((e.avg_opp[c] - own_avg) + (eq_own_avg - eq_opp_avg))
                    : fa.inv_tau * (e.avg_opp[c] - own_avg);
    }
    if (fa.well_balanced) {
      double boundary = cache.ps_iface[1] - cache.ps_iface[0];
      double vol_rho = 0.0, vol_m = 0.0;
      for (int q = 0; q < n2; ++q) {
        double rho_s = e.eq_opp[0][q];
        vol_rho += t.gw[q] * (e.opp[0][q] / rho_s - rbar_rho) * e.dps[q];
        vol_m += t.gw[q] * (e.opp[1][q] / rho_s - rbar_m) * e.dps[q];
      }
      s[1] = rbar_rho * boundary + vol_rho;
      s[2] = rbar_m * boundary + vol_m;
    } else {
      for (int q = 0; q < n2; ++q) {
        double px = e.dphi[q] * 2.0 / dx;
        s[1] += -0.5 * dx * t.gw[q] * e.opp[0][q] * px;
        s[2] += -0.5 * dx * t.gw[q] * e.opp[1][q] * px;
      }
    }
    double fl[3], fr[3];
    flux3(e.opp_iface[0][0], e.opp_iface[1][0], e.opp_iface[2][0], fa.gamma,
          fl);
    flux3(e.opp_iface[0][1], e.opp_iface[1][1], e.opp_iface[2][1], fa.gamma,
          fr);
    double* d = &davg[j].rho;
    for (int c = 0; c < 3; ++c)
      d[c] = diss[c] - (fr[c] - fl[c]) / dx + s[c] / dx;
  }
  (void)gm1;
  (void)nc;
}

double alpha_params_1d(const FamilyArgs1D& fa, const SchemeTables1D& t) {
  int n2 = 2 * t.N;
  double gm1 = fa.gamma - 1.0;
  double dx = fa.own->dx;
  double alpha = 0.0;
  CellEval1D e;
  for (int j = 0; j < fa.own->n_cells; ++j) {
    eval_cell(fa, t, j, e);
    double a1 = 0.0;
    for (int side = 0; side < 2; ++side) {
      State1 u{e.opp_iface[0][side], e.opp_iface[1][side],
               e.opp_iface[2][side]};
      a1 = std::max(a1, wave_speed_x(u, fa.gamma));
    }
    const EqCache1D& cache = (*fa.cache)[j];
    double a2max = 0.0;
    for (int q = 0; q < n2; ++q) {
      double rho = e.opp[0][q];
      double p = gm1 * (e.opp[2][q] - 0.5 * e.opp[1][q] * e.opp[1][q] / rho);
      if (!(rho > 0.0 && p > 0.0))
        throw PositivityFault("alpha scan hit an inadmissible state");
      double phi_hat;
      if (fa.well_balanced) {
        double dps_phys = e.dps[q] * 2.0 / dx;
        phi_hat = cache.ps_jump / (cache.rho_avg_opp * dx) -
                  dps_phys / e.eq_opp[0][q];
      } else {
        double x = fa.own->center(j) + 0.5 * dx * t.gx[q];
        phi_hat = (*fa.phi_x)(x);
      }
      a2max = std::max(a2max,
                       std::abs(phi_hat) * std::sqrt(0.5 * gm1 * rho / p));
    }
    double a2 = 0.5 * t.w1hat * dx * a2max;
    alpha = std::max(alpha, a1 + a2);
  }
  return alpha;
}

void wb_dissipation_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                               int cell, double* moments) {
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  CellEval1D e;
  eval_cell(fa, t, cell, e);
  double dx = fa.own->dx;
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l) {
      double acc = 0.0;
      for (int q = 0; q < n2; ++q) {
        double diss = (e.opp[c][q] - e.own[c][q]) +
                      (e.eq_own[c][q] - e.eq_opp[c][q]);
        acc += t.gw[q] * diss * t.B[q * nc + l];
      }
      moments[c * nc + l] = fa.inv_tau * 0.5 * dx * acc;
    }
}

void flux_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t, int cell,
                     double* moments) {
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  CellEval1D e;
  eval_cell(fa, t, cell, e);
  double fl[3], fr[3], f[3];
  flux3(e.opp_iface[0][0], e.opp_iface[1][0], e.opp_iface[2][0], fa.gamma, fl);
  flux3(e.opp_iface[0][1], e.opp_iface[1][1], e.opp_iface[2][1], fa.gamma, fr);
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l) moments[c * nc + l] = 0.0;
  for (int q = 0; q < n2; ++q) {
    flux3(e.opp[0][q], e.opp[1][q], e.opp[2][q], fa.gamma, f);
    for (int c = 0; c < 3; ++c)
      for (int l = 0; l < nc; ++l)
        moments[c * nc + l] += t.gw[q] * f[c] * t.Bx[q * nc + l];
  }
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l)
      moments[c * nc + l] -= fr[c] * t.Bright[l] - fl[c] * t.Bleft[l];
}

void wb_source_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                          int cell, double* moments) {
  int nc = t.ncoef;
  int n2 = 2 * t.N;
  double gm1 = fa.gamma - 1.0;
  CellEval1D e;
  eval_cell(fa, t, cell, e);
  const EqCache1D& cache = (*fa.cache)[cell];
  double rbar_rho = e.avg_opp[0] / cache.rho_avg_opp;
  double rbar_m = e.avg_opp[1] / cache.rho_avg_opp;
  for (int c = 0; c < 3; ++c)
    for (int l = 0; l < nc; ++l) moments[c * nc + l] = 0.0;
  for (int q = 0; q < n2; ++q) {
    double ps = gm1 * e.eq_opp[2][q];
    double rho_s = e.eq_opp[0][q];
    double rd[3] = {0.0, e.opp[0][q] / rho_s - rbar_rho,
                    e.opp[1][q] / rho_s - rbar_m};
    double rb[3] = {0.0, rbar_rho, rbar_m};
    for (int c = 1; c < 3; ++c)
      for (int l = 0; l < nc; ++l)
        moments[c * nc + l] +=
            t.gw[q] * (rd[c] * e.dps[q] * t.B[q * nc + l] -
                       rb[c] * ps * t.Bx[q * nc + l]);
  }
  for (int c = 1; c < 3; ++c) {
    double rb = c == 1 ? rbar_rho : rbar_m;
    for (int l = 0; l < nc; ++l)
      moments[c * nc + l] += rb * (cache.ps_iface[1] * t.Bright[l] -
                                   cache.ps_iface[0] * t.Bleft[l]);
  }
}

}  // namespace cdgrav
