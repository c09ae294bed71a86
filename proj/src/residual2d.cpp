#include "cdgrav/residual2d.hpp"

#include <algorithm>
#include <cmath>

#include "cdgrav/limiter.hpp"

namespace cdgrav {

namespace {

constexpr int kMaxVol = 64;   // (2N)^2 with N <= 4
constexpr int kMaxQ = 8;      // 2N
constexpr int kMaxCoef2 = 10;

// Four components evaluated in lanes; each lane keeps the sequential
// ascending-l summation, so values agree bit for bit with scalar dots.
typedef double v4d __attribute__((vector_size(32), aligned(8)));

// Solution samples of one cell, component-interleaved per point, plus
// pointers into the static equilibrium sample block laid out as
// [own 4*nvol][opp 4*nvol][dpsx][dpsy][edge 4*nq].
struct CellEval2D {
  alignas(32) double own[kMaxVol][4];
  alignas(32) double opp[kMaxVol][4];
  alignas(32) double edge[2][2][kMaxQ][4];  // [dir][side][point][comp]
  const double* eq_own = nullptr;   // [c*nvol + q]
  const double* eq_opp = nullptr;   // [c*nvol + q]
  const double* dpsx = nullptr;     // [q], reference-coordinate derivative
  const double* dpsy = nullptr;
  const double* edge_ps = nullptr;  // [(dir*2+side)*nq + q]
  double dphix[kMaxVol], dphiy[kMaxVol];  // projected potential (non-WB)
  double avg_opp[4];
};

template <int NC>
inline void transpose_coefs(const double* cell, int nc, v4d* ct) {
  for (int l = 0; l < NC; ++l)
    ct[l] = v4d{cell[l], cell[nc + l], cell[2 * nc + l], cell[3 * nc + l]};
}

template <int NC>
inline v4d dot4(const double* row, const v4d* ct) {
  v4d acc = {0.0, 0.0, 0.0, 0.0};
  for (int l = 0; l < NC; ++l) acc += row[l] * ct[l];
  return acc;
}

template <int NC, int NQ>
void eval_cell(const FamilyArgs2D& fa, const SchemeTables2D& t, int i, int j,
               CellEval2D& e) {
  constexpr int nc = NC;
  constexpr int nq = NQ;
  constexpr int nvol = nq * nq;
  constexpr int tN = NQ / 2;
  const int oleft = fa.opp_left();
  v4d ct_own[NC], ct_opp[2][2][NC];
  transpose_coefs<NC>(fa.own->cell(i, j), nc, ct_own);
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      transpose_coefs<NC>(fa.opp->cell(i + oleft + sx, j + oleft + sy), nc,
                          ct_opp[sx][sy]);

  const double* cache =
      fa.eval_cache().data() +
      (static_cast<size_t>(j) * fa.own->nx + i) * fa.eq->eval_stride;
  e.eq_own = cache;
  e.eq_opp = cache + 4 * nvol;
  e.dpsx = cache + 8 * nvol;
  e.dpsy = e.dpsx + nvol;
  e.edge_ps = e.dpsy + nvol;

  for (int q = 0; q < nvol; ++q) {
    int sx = (q / nq) < tN ? 0 : 1;
    int sy = (q % nq) < tN ? 0 : 1;
    v4d own = dot4<NC>(&t.V[q * nc], ct_own);
    v4d opp = dot4<NC>(&t.Vopp[q * nc], ct_opp[sx][sy]);
    for (int c = 0; c < 4; ++c) {
      e.own[q][c] = own[c];
      e.opp[q][c] = opp[c];
    }
  }
  if (!fa.well_balanced && fa.phi_opp) {
    const double* pc[2][2];
    for (int sx = 0; sx < 2; ++sx)
      for (int sy = 0; sy < 2; ++sy)
        pc[sx][sy] =
            fa.phi_opp->cell(i + oleft + sx, j + oleft + sy);
    for (int q = 0; q < nvol; ++q) {
      int sx = (q / nq) < tN ? 0 : 1;
      int sy = (q % nq) < tN ? 0 : 1;
      double gx = 0.0, gy = 0.0;
      for (int l = 0; l < nc; ++l) {
        gx += t.VoppX[q * nc + l] * pc[sx][sy][l];
        gy += t.VoppY[q * nc + l] * pc[sx][sy][l];
      }
      e.dphix[q] = gx;
      e.dphiy[q] = gy;
    }
  }
  for (int side = 0; side < 2; ++side)
    for (int q = 0; q < nq; ++q) {
      int st = q < tN ? 0 : 1;  // tangential half selects the opposite cell
      v4d ex = dot4<NC>(&t.ExOpp[(side * nq + q) * nc], ct_opp[side][st]);
      v4d ey = dot4<NC>(&t.EyOpp[(side * nq + q) * nc], ct_opp[st][side]);
      for (int c = 0; c < 4; ++c) {
        e.edge[0][side][q][c] = ex[c];
        e.edge[1][side][q][c] = ey[c];
      }
    }
  // opposite averages over my cell, x-mirror-paired like the setup caches
  {
    v4d acc = {0.0, 0.0, 0.0, 0.0};
    for (int px = 0; px < tN; ++px) {
      v4d pair = {0.0, 0.0, 0.0, 0.0};
      for (int side = 0; side < 2; ++side) {
        int qx = side == 0 ? px : nq - 1 - px;
        v4d part = {0.0, 0.0, 0.0, 0.0};
        for (int qy = 0; qy < nq; ++qy) {
          int idx = qx * nq + qy;
          const v4d* u = reinterpret_cast<const v4d*>(e.opp[idx]);
          part += t.wvol[idx] * (*u);
        }
        pair = side == 0 ? part : pair + part;
      }
      acc += pair;
    }
    for (int c = 0; c < 4; ++c) e.avg_opp[c] = 0.25 * acc[c];
  }
}

// Opposite-field values and equilibrium cache pointers only; enough for the
// CFL scan.
template <int NC, int NQ>
void eval_opp_impl(const FamilyArgs2D& fa, const SchemeTables2D& t, int i,
                   int j, CellEval2D& e) {
  constexpr int nc = NC;
  constexpr int nq = NQ;
  constexpr int nvol = nq * nq;
  constexpr int tN = NQ / 2;
  const int oleft = fa.opp_left();
  v4d ct_opp[2][2][NC];
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      transpose_coefs<NC>(fa.opp->cell(i + oleft + sx, j + oleft + sy), nc,
                          ct_opp[sx][sy]);
  const double* cache =
      fa.eval_cache().data() +
      (static_cast<size_t>(j) * fa.own->nx + i) * fa.eq->eval_stride;
  e.eq_own = cache;
  e.eq_opp = cache + 4 * nvol;
  e.dpsx = cache + 8 * nvol;
  e.dpsy = e.dpsx + nvol;
  e.edge_ps = e.dpsy + nvol;
  for (int q = 0; q < nvol; ++q) {
    int sx = (q / nq) < tN ? 0 : 1;
    int sy = (q % nq) < tN ? 0 : 1;
    v4d opp = dot4<NC>(&t.Vopp[q * nc], ct_opp[sx][sy]);
    for (int c = 0; c < 4; ++c) e.opp[q][c] = opp[c];
  }
}

void eval_opp_only(const FamilyArgs2D& fa, const SchemeTables2D& t, int i,
                   int j, CellEval2D& e) {
  if (t.ncoef == 6 && t.N == 3)
    eval_opp_impl<6, 6>(fa, t, i, j, e);
  else if (t.ncoef == 10 && t.N == 4)
    eval_opp_impl<10, 8>(fa, t, i, j, e);
  else if (t.ncoef == 3 && t.N == 2)
    eval_opp_impl<3, 4>(fa, t, i, j, e);
  else if (t.ncoef == 1 && t.N == 1)
    eval_opp_impl<1, 2>(fa, t, i, j, e);
  else
    throw std::invalid_argument("unsupported degree/quadrature combination");
}

void eval_cell_rt(const FamilyArgs2D& fa, const SchemeTables2D& t, int i,
                  int j, CellEval2D& e) {
  if (t.ncoef == 6 && t.N == 3)
    eval_cell<6, 6>(fa, t, i, j, e);
  else if (t.ncoef == 10 && t.N == 4)
    eval_cell<10, 8>(fa, t, i, j, e);
  else if (t.ncoef == 3 && t.N == 2)
    eval_cell<3, 4>(fa, t, i, j, e);
  else if (t.ncoef == 1 && t.N == 1)
    eval_cell<1, 2>(fa, t, i, j, e);
  else
    throw std::invalid_argument("unsupported degree/quadrature combination");
}

inline void flux4(const double* u, double gamma, double* f1, double* f2) {
  double inv_rho = 1.0 / u[0];
  double vx = u[1] * inv_rho, vy = u[2] * inv_rho;
  double p =
      (gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) * inv_rho);
  f1[0] = u[1];
  f1[1] = u[1] * vx + p;
  f1[2] = u[2] * vx;
  f1[3] = (u[3] + p) * vx;
  f2[0] = u[2];
  f2[1] = u[1] * vy;
  f2[2] = u[2] * vy + p;
  f2[3] = (u[3] + p) * vy;
}

template <int NC, int NQ>
void assemble_cell(const FamilyArgs2D& fa, const SchemeTables2D& t, int i,
                   int j, const CellEval2D& e, double* out) {
  constexpr int nc = NC;
  constexpr int nq = NQ;
  constexpr int nvol = nq * nq;
  constexpr int tN = NQ / 2;
  const double gm1 = fa.gamma - 1.0;
  const double dx = fa.own->dx, dy = fa.own->dy;
  const EqCache2D& cc = fa.cache()[static_cast<size_t>(j) * fa.own->nx + i];
  double rbar[3] = {0.0, 0.0, 0.0};  // rho, m1, m2
  if (fa.well_balanced) {
    rbar[0] = e.avg_opp[0] / cc.rho_avg_opp;
    rbar[1] = e.avg_opp[1] / cc.rho_avg_opp;
    rbar[2] = e.avg_opp[2] / cc.rho_avg_opp;
  }
  const double qv = 0.25 * dx * dy * fa.inv_tau;  // dissipation prefactor
  const double sxf = 0.5 * dy;                    // Phi_xi-tested terms
  const double syf = 0.5 * dx;

  double acc[4][kMaxCoef2];
  double stash[4][kMaxCoef2];
  double rowacc[4][kMaxCoef2];
  for (int c = 0; c < 4; ++c)
    for (int l = 0; l < nc; ++l) acc[c][l] = 0.0;

  const double xc = fa.own->center_x(i), yc = fa.own->center_y(j);

  for (int pxq = 0; pxq < tN; ++pxq) {
    for (int side = 0; side < 2; ++side) {
      int qx = side == 0 ? pxq : nq - 1 - pxq;
      for (int c = 0; c < 4; ++c)
        for (int l = 0; l < nc; ++l) rowacc[c][l] = 0.0;
      for (int qy = 0; qy < nq; ++qy) {
        int q = qx * nq + qy;
        double w = t.wvol[q];
        const double* u = e.opp[q];
        double f1[4], f2[4];
        flux4(u, fa.gamma, f1, f2);
        double gv[4], gx[4], gy[4];
        if (fa.well_balanced) {
          double ps = gm1 * e.eq_opp[3 * nvol + q];
          double rho_s = e.eq_opp[q];
          // one lanewise division; each lane rounds like the scalar quotient
          v4d rat = *reinterpret_cast<const v4d*>(u) /
                    v4d{rho_s, rho_s, rho_s, rho_s};
          double rd_rho = rat[0] - rbar[0];
          double rd_m1 = rat[1] - rbar[1];
          double rd_m2 = rat[2] - rbar[2];
          for (int c = 0; c < 4; ++c) {
            double diss = (e.opp[q][c] - e.own[q][c]) +
                          (e.eq_own[c * nvol + q] - e.eq_opp[c * nvol + q]);
            gv[c] = qv * diss;
          }
          gv[1] += sxf * (rd_rho * e.dpsx[q]);
          gv[2] += syf * (rd_rho * e.dpsy[q]);
          gv[3] += sxf * (rd_m1 * e.dpsx[q]) + syf * (rd_m2 * e.dpsy[q]);
          gx[0] = f1[0];
          gx[1] = f1[1] - rbar[0] * ps;
          gx[2] = f1[2];
          gx[3] = f1[3] - rbar[1] * ps;
          gy[0] = f2[0];
          gy[1] = f2[1];
          gy[2] = f2[2] - rbar[0] * ps;
          gy[3] = f2[3] - rbar[2] * ps;
        } else {
          double px = e.dphix[q] * 2.0 / dx;
          double py = e.dphiy[q] * 2.0 / dy;
          double qvol = 0.25 * dx * dy;
          for (int c = 0; c < 4; ++c) {
            gv[c] = qv * (e.opp[q][c] - e.own[q][c]);
            gx[c] = f1[c];
            gy[c] = f2[c];
          }
          gv[1] += qvol * (-u[0] * px);
          gv[2] += qvol * (-u[0] * py);
          gv[3] += qvol * (-(u[1] * px + u[2] * py));
        }
        const double* bv = &t.V[q * nc];
        const double* bx = &t.Vx[q * nc];
        const double* by = &t.Vy[q * nc];
        for (int c = 0; c < 4; ++c) {
          double av = w * gv[c];
          double ax = w * (sxf * gx[c]);
          double ay = w * (syf * gy[c]);
          for (int l = 0; l < nc; ++l)
            rowacc[c][l] += av * bv[l] + (ax * bx[l] + ay * by[l]);
        }
      }
      if (side == 0) {
        for (int c = 0; c < 4; ++c)
          for (int l = 0; l < nc; ++l) stash[c][l] = rowacc[c][l];
      } else {
        for (int c = 0; c < 4; ++c)
          for (int l = 0; l < nc; ++l) acc[c][l] += stash[c][l] + rowacc[c][l];
      }
    }
  }

  // x-edge terms: the low/high pair is summed per tangential point
  const double selx[4] = {0.0, rbar[0], 0.0, rbar[1]};
  const double sely[4] = {0.0, 0.0, rbar[0], rbar[2]};
  for (int q = 0; q < nq; ++q) {
    double w = 0.5 * t.t1.gw[q] * dy;
    double fr1[4], fr2[4], fl1[4], fl2[4];
    const double* ur = e.edge[0][1][q];
    const double* ul = e.edge[0][0][q];
    flux4(ur, fa.gamma, fr1, fr2);
    flux4(ul, fa.gamma, fl1, fl2);
    double ps_r = e.edge_ps[1 * nq + q], ps_l = e.edge_ps[0 * nq + q];
    const double* br = &t.ExOwn[(1 * nq + q) * nc];
    const double* bl = &t.ExOwn[(0 * nq + q) * nc];
    for (int c = 0; c < 4; ++c) {
      double tr = fa.well_balanced ? -fr1[c] + selx[c] * ps_r : -fr1[c];
      double tl = fa.well_balanced ? fl1[c] - selx[c] * ps_l : fl1[c];
      double wr = w * tr, wl = w * tl;
      for (int l = 0; l < nc; ++l) acc[c][l] += wr * br[l] + wl * bl[l];
    }
  }
  // y-edge terms, x-mirror-paired along the edge
  for (int pxq = 0; pxq < tN; ++pxq) {
    for (int side = 0; side < 2; ++side) {
      int q = side == 0 ? pxq : nq - 1 - pxq;
      double w = 0.5 * t.t1.gw[q] * dx;
      double ft1[4], ft2[4], fb1[4], fb2[4];
      const double* ut = e.edge[1][1][q];
      const double* ub = e.edge[1][0][q];
      flux4(ut, fa.gamma, ft1, ft2);
      flux4(ub, fa.gamma, fb1, fb2);
      double ps_t = e.edge_ps[(2 + 1) * nq + q];
      double ps_b = e.edge_ps[(2 + 0) * nq + q];
      const double* bt = &t.EyOwn[(1 * nq + q) * nc];
      const double* bb = &t.EyOwn[(0 * nq + q) * nc];
      for (int c = 0; c < 4; ++c) {
        double tt = fa.well_balanced ? -ft2[c] + sely[c] * ps_t : -ft2[c];
        double tb = fa.well_balanced ? fb2[c] - sely[c] * ps_b : fb2[c];
        double wt = w * tt, wb = w * tb;
        for (int l = 0; l < nc; ++l) {
          double contrib = wt * bt[l] + wb * bb[l];
          if (side == 0)
            stash[c][l] = contrib;
          else
            acc[c][l] += stash[c][l] + contrib;
        }
      }
    }
  }

  double inv_area = 1.0 / (dx * dy);
  for (int c = 0; c < 4; ++c)
    for (int l = 0; l < nc; ++l)
      out[c * nc + l] = acc[c][l] * inv_area / Basis2D::cnorm(l);
}

template <int NC, int NQ>
void assemble_rhs_2d_impl(const FamilyArgs2D& fa, const SchemeTables2D& t,
                          Field2D& dudt) {
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    CellEval2D e;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int j = 0; j < fa.own->ny; ++j)
      for (int i = 0; i < fa.own->nx; ++i) {
        eval_cell<NC, NQ>(fa, t, i, j, e);
        assemble_cell<NC, NQ>(fa, t, i, j, e, dudt.cell(i, j));
      }
  }
}

}  // namespace

void assemble_rhs_2d(const FamilyArgs2D& fa, const SchemeTables2D& t,
                     Field2D& dudt) {
  if (4 * t.N * t.N > kMaxVol)
    throw std::invalid_argument("quadrature too large");
  if (t.ncoef == 6 && t.N == 3)
    assemble_rhs_2d_impl<6, 6>(fa, t, dudt);
  else if (t.ncoef == 10 && t.N == 4)
    assemble_rhs_2d_impl<10, 8>(fa, t, dudt);
  else if (t.ncoef == 3 && t.N == 2)
    assemble_rhs_2d_impl<3, 4>(fa, t, dudt);
  else if (t.ncoef == 1 && t.N == 1)
    assemble_rhs_2d_impl<1, 2>(fa, t, dudt);
  else
    throw std::invalid_argument("unsupported degree/quadrature combination");
}

void cell_average_rhs_2d(const FamilyArgs2D& fa, const SchemeTables2D& t,
                         std::vector<State2>& davg) {
  const int nq = 2 * t.N;
  const int nvol = nq * nq;
  const double dx = fa.own->dx, dy = fa.own->dy;
  davg.assign(static_cast<size_t>(fa.own->nx) * fa.own->ny, State2{0, 0, 0, 0});
  CellEval2D e;
  for (int j = 0; j < fa.own->ny; ++j)
    for (int i = 0; i < fa.own->nx; ++i) {
      eval_cell_rt(fa, t, i, j, e);
      const EqCache2D& cc =
          fa.cache()[static_cast<size_t>(j) * fa.own->nx + i];
      double rbar[3] = {e.avg_opp[0] / cc.rho_avg_opp,
                        e.avg_opp[1] / cc.rho_avg_opp,
                        e.avg_opp[2] / cc.rho_avg_opp};
      double d[4];
      for (int c = 0; c < 4; ++c) {
        double own_avg = fa.own->average(i, j, c);
        double eq_own_a = fa.primal ? fa.eq->C.average(i, j, c)
                                    : fa.eq->D.average(i, j, c);
        double eq_opp_avg = 0.0;
        for (int q = 0; q < nvol; ++q)
          eq_opp_avg += t.wvol[q] * e.eq_opp[c * nvol + q];
        eq_opp_avg *= 0.25;
        d[c] = fa.well_balanced
                   ? fa.inv_tau *
                         ((e.avg_opp[c] - own_avg) + (eq_own_a - eq_opp_avg))
                   : fa.inv_tau * (e.avg_opp[c] - own_avg);
      }
      // interface flux differences
      double del_x[4] = {0, 0, 0, 0}, del_y[4] = {0, 0, 0, 0};
      double del_x_ps = 0.0, del_y_ps = 0.0;
      for (int q = 0; q < nq; ++q) {
        double w = 0.5 * t.t1.gw[q];
        double f1r[4], f2r[4], f1l[4], f2l[4];
        double g1[4], g2[4];
        flux4(e.edge[0][1][q], fa.gamma, f1r, g2);
        flux4(e.edge[0][0][q], fa.gamma, f1l, g2);
        flux4(e.edge[1][1][q], fa.gamma, g1, f2r);
        flux4(e.edge[1][0][q], fa.gamma, g1, f2l);
        for (int c = 0; c < 4; ++c) {
          del_x[c] += w * (f1r[c] - f1l[c]);
          del_y[c] += w * (f2r[c] - f2l[c]);
        }
        del_x_ps += w * (e.edge_ps[1 * nq + q] - e.edge_ps[0 * nq + q]);
        del_y_ps += w * (e.edge_ps[3 * nq + q] - e.edge_ps[2 * nq + q]);
      }
      double s[4] = {0, 0, 0, 0};
      if (fa.well_balanced) {
        double vx = 0, vy = 0, ve = 0;
        for (int q = 0; q < nvol; ++q) {
          double w = t.wvol[q];
          double rho_s = e.eq_opp[q];
          double rd_rho = e.opp[q][0] / rho_s - rbar[0];
          double rd_m1 = e.opp[q][1] / rho_s - rbar[1];
          double rd_m2 = e.opp[q][2] / rho_s - rbar[2];
          double px = e.dpsx[q] * 2.0 / dx, py = e.dpsy[q] * 2.0 / dy;
          vx += w * rd_rho * px;
          vy += w * rd_rho * py;
          ve += w * (rd_m1 * px + rd_m2 * py);
        }
        double quarter = 0.25 * dx * dy;
        s[1] = quarter * vx + rbar[0] * dy * del_x_ps;
        s[2] = quarter * vy + rbar[0] * dx * del_y_ps;
        s[3] = quarter * ve + rbar[1] * dy * del_x_ps + rbar[2] * dx * del_y_ps;
      } else {
        for (int q = 0; q < nvol; ++q) {
          double w = t.wvol[q];
          double px = e.dphix[q] * 2.0 / dx;
          double py = e.dphiy[q] * 2.0 / dy;
          s[1] += w * (-e.opp[q][0] * px);
          s[2] += w * (-e.opp[q][0] * py);
          s[3] += w * (-(e.opp[q][1] * px + e.opp[q][2] * py));
        }
        for (int c = 1; c < 4; ++c) s[c] *= 0.25 * dx * dy;
      }
      State2& o = davg[static_cast<size_t>(j) * fa.own->nx + i];
      double* res = &o.rho;
      for (int c = 0; c < 4; ++c)
        res[c] = d[c] - del_x[c] / dx - del_y[c] / dy + s[c] / (dx * dy);
    }
}

AlphaParams alpha_params_2d(const FamilyArgs2D& fa, const SchemeTables2D& t) {
  const int nc = t.ncoef;
  const int nq = 2 * t.N;
  const int nvol = nq * nq;
  const double gm1 = fa.gamma - 1.0;
  const double dx = fa.own->dx, dy = fa.own->dy;
  const int n_so = static_cast<int>(t.so_quad.size());
  AlphaParams out;
  double ax_max = 0.0, ay_max = 0.0;
  bool bad = false;
#ifdef _OPENMP
#pragma omp parallel reduction(max : ax_max, ay_max) reduction(|| : bad)
#endif
  {
    CellEval2D e;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int j = 0; j < fa.own->ny; ++j)
      for (int i = 0; i < fa.own->nx; ++i) {
        const EqCache2D& cc =
            fa.cache()[static_cast<size_t>(j) * fa.own->nx + i];
        // wave speeds over the one-sided critical traces of the opposite field
        double a1x = 0.0, a1y = 0.0;
        int oleft = fa.opp_left();
        v4d ct[2][2][kMaxCoef2];
        for (int sx = 0; sx < 2; ++sx)
          for (int sy = 0; sy < 2; ++sy) {
            const double* cell = fa.opp->cell(i + oleft + sx, j + oleft + sy);
            for (int l = 0; l < nc; ++l)
              ct[sx][sy][l] = v4d{cell[l], cell[nc + l], cell[2 * nc + l],
                                  cell[3 * nc + l]};
          }
        for (int s = 0; s < n_so; ++s) {
          int quad = t.so_quad[s];
          int sx = quad >> 1, sy = quad & 1;
          const double* row = &t.so_rows[static_cast<size_t>(s) * nc];
          v4d val = {0.0, 0.0, 0.0, 0.0};
          for (int l = 0; l < nc; ++l) val += row[l] * ct[sx][sy][l];
          double rho = val[0], m1 = val[1], m2 = val[2], en = val[3];
          double p = gm1 * (en - 0.5 * (m1 * m1 + m2 * m2) / rho);
          if (!(rho > 0.0 && p > 0.0)) {
            bad = true;
            continue;
          }
          double cs = std::sqrt(fa.gamma * p / rho);
          a1x = std::max(a1x, std::abs(m1 / rho) + cs);
          a1y = std::max(a1y, std::abs(m2 / rho) + cs);
        }
        eval_opp_only(fa, t, i, j, e);
        double as = 0.0;
        double xc = fa.own->center_x(i), yc = fa.own->center_y(j);
        for (int q = 0; q < nvol; ++q) {
          double rho = e.opp[q][0];
          double p = gm1 * (e.opp[q][3] -
                            0.5 *
                                (e.opp[q][1] * e.opp[q][1] +
                                 e.opp[q][2] * e.opp[q][2]) /
                                rho);
          if (!(rho > 0.0 && p > 0.0)) {
            bad = true;
            continue;
          }
          double hx, hy;
          if (fa.well_balanced) {
            hx = -e.dpsx[q] * (2.0 / dx) / e.eq_opp[q] -
                 cc.jump_x / (cc.rho_avg_opp * dx * dy);
            hy = -e.dpsy[q] * (2.0 / dy) / e.eq_opp[q] -
                 cc.jump_y / (cc.rho_avg_opp * dx * dy);
          } else {
            int qx = q / nq, qy = q % nq;
            double x = xc + 0.5 * dx * t.t1.gx[qx];
            double y = yc + 0.5 * dy * t.t1.gx[qy];
            hx = (*fa.phi_x)(x, y);
            hy = (*fa.phi_y)(x, y);
          }
          double mag = std::sqrt(hx * hx + hy * hy);
          as = std::max(as, mag * std::sqrt(0.5 * gm1 * rho / p));
        }
        ax_max = std::max(ax_max, a1x + 0.25 * t.t1.w1hat * dx * as);
        ay_max = std::max(ay_max, a1y + 0.25 * t.t1.w1hat * dy * as);
      }
  }
  if (bad) throw PositivityFault("alpha scan hit an inadmissible state");
  out.alpha_x = ax_max;
  out.alpha_y = ay_max;
  return out;
}

}  // namespace cdgrav
