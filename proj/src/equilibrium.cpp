#include "cdgrav/equilibrium.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cdgrav/projection.hpp"

namespace cdgrav {

EquilibriumPair1D project_equilibrium(const EquilibriumProfile1D& prof,
                                      const Mesh1D& mesh, int k, double gamma,
                                      int ghost) {
  EquilibriumPair1D eq;
  eq.gamma = gamma;
  eq.C.resize(MeshFamily::primal, mesh, ghost, 3, k + 1);
  eq.D.resize(MeshFamily::dual, mesh, ghost, 3, k + 1);
  Fn1D fE = [&prof, gamma](double x) { return prof.p(x) / (gamma - 1.0); };
  for (Field1D* f : {&eq.C, &eq.D}) {
    project_field(prof.rho, *f, 0, -ghost, f->n_cells + ghost, true);
    project_field(fE, *f, 2, -ghost, f->n_cells + ghost, true);
  }
  return eq;
}

EquilibriumPair2D project_equilibrium(const EquilibriumProfile2D& prof,
                                      const Mesh2D& mesh, int k, double gamma,
                                      int ghost) {
  EquilibriumPair2D eq;
  eq.gamma = gamma;
  eq.C.resize(MeshFamily::primal, mesh, ghost, 4, Basis2D(k).size());
  eq.D.resize(MeshFamily::dual, mesh, ghost, 4, Basis2D(k).size());
  Fn2D fE = [&prof, gamma](double x, double y) {
    return prof.p(x, y) / (gamma - 1.0);
  };
  for (Field2D* f : {&eq.C, &eq.D}) {
    project_field(prof.rho, *f, 0, -ghost, f->nx + ghost, -ghost, f->ny + ghost,
                  true);
    project_field(fE, *f, 3, -ghost, f->nx + ghost, -ghost, f->ny + ghost,
                  true);
  }
  return eq;
}

namespace {

inline double eval_comp(const double* cell, int comp, int nc, const double* row) {
  const double* c = cell + comp * nc;
  double v = 0.0;
  for (int l = 0; l < nc; ++l) v += row[l] * c[l];
  return v;
}

}  // namespace

void compute_eq_caches(EquilibriumPair1D& eq, const SchemeTables1D& t) {
  double gm1 = eq.gamma - 1.0;
  int nc = t.ncoef;
  auto fill = [&](const Field1D& opp, int n_cells, int opp_left,
                  std::vector<EqCache1D>& out) {
    out.assign(n_cells, EqCache1D{});
    for (int j = 0; j < n_cells; ++j) {
      const double* cl = opp.cell(j + opp_left);
      const double* cr = opp.cell(j + opp_left + 1);
      EqCache1D& cache = out[j];
      double acc = 0.0;
      for (int q = 0; q < t.N; ++q) {
        int qr = 2 * t.N - 1 - q;
        double left = t.gw[q] * eval_comp(cl, 0, nc, &t.Bopp[q * nc]);
        double right = t.gw[qr] * eval_comp(cr, 0, nc, &t.Bopp[qr * nc]);
        acc += left + right;
      }
      cache.rho_avg_opp = 0.5 * acc;
      cache.ps_iface[0] = gm1 * eval_comp(cl, 2, nc, t.Bctr.data());
      cache.ps_iface[1] = gm1 * eval_comp(cr, 2, nc, t.Bctr.data());
      cache.ps_jump = gm1 * eval_comp(cl, 2, nc, t.Bright.data()) -
                      gm1 * eval_comp(cr, 2, nc, t.Bleft.data());
    }
  };
  // primal cell j overlaps dual cells j and j+1; dual cell d overlaps primal
  // cells d-1 and d
  fill(eq.D, eq.C.n_cells, 0, eq.pc);
  fill(eq.C, eq.D.n_cells, -1, eq.dc);
}

void compute_eq_caches(EquilibriumPair2D& eq, const SchemeTables2D& t) {
  double gm1 = eq.gamma - 1.0;
  int nc = t.ncoef;
  int nq = 2 * t.N;
  const SchemeTables1D& t1 = t.t1;
  auto fill = [&](const Field2D& opp, int ncx, int ncy, int oleft,
                  std::vector<EqCache2D>& out) {
    out.assign(static_cast<size_t>(ncx) * ncy, EqCache2D{});
    std::vector<double> row(nc);
    for (int j = 0; j < ncy; ++j)
      for (int i = 0; i < ncx; ++i) {
        EqCache2D& cache = out[static_cast<size_t>(j) * ncx + i];
        // average of the opposite rho^s over this cell, quadrant by quadrant
        double acc = 0.0;
        for (int px = 0; px < t.N; ++px) {
          double pair = 0.0;
          for (int side = 0; side < 2; ++side) {
            int qx = side == 0 ? px : nq - 1 - px;
            int oi = i + oleft + (qx < t.N ? 0 : 1);
            double part = 0.0;
            for (int qy = 0; qy < nq; ++qy) {
              int oj = j + oleft + (qy < t.N ? 0 : 1);
              int idx = qx * nq + qy;
              part += t.wvol[idx] * eval_comp(opp.cell(oi, oj), 0, nc,
                                              &t.Vopp[idx * nc]);
            }
            pair = side == 0 ? part : pair + part;
          }
          acc += pair;
        }
        cache.rho_avg_opp = 0.25 * acc;
        // line-integrated jumps of p^s across the center lines
        double jx = 0.0, jy = 0.0;
        for (int q = 0; q < nq; ++q) {
          double tang = t1.gx[q];
          double to = q < t.N ? tang + 1.0 : tang - 1.0;
          int on = oleft + (q < t.N ? 0 : 1);
          {
            const double* left = opp.cell(i + oleft, j + on);
            const double* right = opp.cell(i + oleft + 1, j + on);
            double pl = 0.0, pr = 0.0;
            for (int l = 0; l < nc; ++l) {
              pl += Basis2D::phi(l, 1.0, to) * left[3 * nc + l];
              pr += Basis2D::phi(l, -1.0, to) * right[3 * nc + l];
            }
            jx += t1.gw[q] * (gm1 * pr - gm1 * pl);
          }
          {
            const double* bot = opp.cell(i + on, j + oleft);
            const double* top = opp.cell(i + on, j + oleft + 1);
            double pb = 0.0, pt = 0.0;
            for (int l = 0; l < nc; ++l) {
              pb += Basis2D::phi(l, to, 1.0) * bot[3 * nc + l];
              pt += Basis2D::phi(l, to, -1.0) * top[3 * nc + l];
            }
            jy += t1.gw[q] * (gm1 * pt - gm1 * pb);
          }
        }
        cache.jump_x = 0.5 * opp.dy * jx;
        cache.jump_y = 0.5 * opp.dx * jy;
      }
  };
  fill(eq.D, eq.C.nx, eq.C.ny, 0, eq.pc);
  fill(eq.C, eq.D.nx, eq.D.ny, -1, eq.dc);

  // per-cell samples of both projected equilibria at the volume and edge
  // points; the assembly reads these instead of re-evaluating polynomials
  const int nvol = nq * nq;
  eq.eval_stride = 8 * nvol + 2 * nvol + 4 * nq;
  auto fill_eval = [&](const Field2D& own, const Field2D& opp, int ncx,
                       int ncy, int oleft, std::vector<double>& out) {
    out.assign(static_cast<size_t>(ncx) * ncy * eq.eval_stride, 0.0);
    for (int j = 0; j < ncy; ++j)
      for (int i = 0; i < ncx; ++i) {
        double* dst =
            out.data() +
            (static_cast<size_t>(j) * ncx + i) * eq.eval_stride;
        double* d_own = dst;
        double* d_opp = dst + 4 * nvol;
        double* d_dpsx = dst + 8 * nvol;
        double* d_dpsy = d_dpsx + nvol;
        double* d_edge = d_dpsy + nvol;
        const double* co = own.cell(i, j);
        const double* oc[2][2];
        for (int sx = 0; sx < 2; ++sx)
          for (int sy = 0; sy < 2; ++sy)
            oc[sx][sy] = opp.cell(i + oleft + sx, j + oleft + sy);
        for (int q = 0; q < nvol; ++q) {
          int sx = (q / nq) < t.N ? 0 : 1;
          int sy = (q % nq) < t.N ? 0 : 1;
          for (int c = 0; c < 4; ++c) {
            d_own[c * nvol + q] = eval_comp(co, c, nc, &t.V[q * nc]);
            d_opp[c * nvol + q] =
                eval_comp(oc[sx][sy], c, nc, &t.Vopp[q * nc]);
          }
          d_dpsx[q] = gm1 * eval_comp(oc[sx][sy], 3, nc, &t.VoppX[q * nc]);
          d_dpsy[q] = gm1 * eval_comp(oc[sx][sy], 3, nc, &t.VoppY[q * nc]);
        }
        for (int side = 0; side < 2; ++side)
          for (int q = 0; q < nq; ++q) {
            int st = q < t.N ? 0 : 1;
            d_edge[(0 * 2 + side) * nq + q] =
                gm1 *
                eval_comp(oc[side][st], 3, nc, &t.ExOpp[(side * nq + q) * nc]);
            d_edge[(1 * 2 + side) * nq + q] =
                gm1 *
                eval_comp(oc[st][side], 3, nc, &t.EyOpp[(side * nq + q) * nc]);
          }
      }
  };
  fill_eval(eq.C, eq.D, eq.C.nx, eq.C.ny, 0, eq.pc_eval);
  fill_eval(eq.D, eq.C, eq.D.nx, eq.D.ny, -1, eq.dc_eval);
}

namespace {

void check_admissible_rows(const double* cell, const double* rows, int n_rows,
                           int nc, int ncomp, double gamma, const char* fam,
                           long id) {
  for (int s = 0; s < n_rows; ++s) {
    const double* row = rows + s * nc;
    double rho = eval_comp(cell, 0, nc, row);
    double e = eval_comp(cell, ncomp - 1, nc, row);
    double m2 = 0.0;
    for (int c = 1; c < ncomp - 1; ++c) {
      double m = eval_comp(cell, c, nc, row);
      m2 += m * m;
    }
    double p = (gamma - 1.0) * (e - 0.5 * m2 / rho);
    if (!(rho > 0.0 && p > 0.0))
      throw std::runtime_error(
          std::string("projected equilibrium inadmissible on ") + fam +
          " cell " + std::to_string(id));
  }
}

}  // namespace

void validate_equilibrium(const EquilibriumPair1D& eq,
                          const SchemeTables1D& t) {
  for (int j = 0; j < eq.C.n_cells; ++j)
    check_admissible_rows(eq.C.cell(j), t.BS.data(), t.n_s(), t.ncoef, 3,
                          eq.gamma, "primal", j);
  for (int d = 0; d < eq.D.n_cells; ++d)
    check_admissible_rows(eq.D.cell(d), t.BS.data(), t.n_s(), t.ncoef, 3,
                          eq.gamma, "dual", d);
  for (int j = 0; j < static_cast<int>(eq.pc.size()); ++j)
    if (!(eq.pc[j].rho_avg_opp > 0.0))
      throw std::runtime_error("equilibrium density average not positive");
  for (int d = 0; d < static_cast<int>(eq.dc.size()); ++d)
    if (!(eq.dc[d].rho_avg_opp > 0.0))
      throw std::runtime_error("equilibrium density average not positive");
}

void validate_equilibrium(const EquilibriumPair2D& eq,
                          const SchemeTables2D& t) {
  auto scan = [&](const Field2D& f, const char* fam) {
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i)
        check_admissible_rows(f.cell(i, j), t.BS.data(), t.n_s(), t.ncoef, 4,
                              eq.gamma, fam, static_cast<long>(j) * f.nx + i);
  };
  scan(eq.C, "primal");
  scan(eq.D, "dual");
  for (const EqCache2D& c : eq.pc)
    if (!(c.rho_avg_opp > 0.0))
      throw std::runtime_error("equilibrium density average not positive");
  for (const EqCache2D& c : eq.dc)
    if (!(c.rho_avg_opp > 0.0))
      throw std::runtime_error("equilibrium density average not positive");
}

}  // namespace cdgrav
