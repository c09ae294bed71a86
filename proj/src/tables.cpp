#include "cdgrav/tables.hpp"

#include <algorithm>
#include <cmath>

namespace cdgrav {

namespace {

// Right-half points in cell coordinates, then the mirrored left half, so the
// pair (q, 2N-1-q) is an exact negation.
void mirrored_points(const QuadRule& ref, std::vector<double>& pts,
                     std::vector<double>& wts) {
  int n = static_cast<int>(ref.nodes.size());
  pts.assign(2 * n, 0.0);
  wts.assign(2 * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double right = 0.5 + 0.5 * ref.nodes[i];
    pts[n + i] = right;
    pts[n - 1 - i] = -right;
    wts[n + i] = ref.weights[i];
    wts[n - 1 - i] = ref.weights[i];
  }
}

void basis_rows_1d(const std::vector<double>& pts, int ncoef,
                   std::vector<double>& val, std::vector<double>* dval) {
  int npts = static_cast<int>(pts.size());
  val.assign(static_cast<size_t>(npts) * ncoef, 0.0);
  if (dval) dval->assign(static_cast<size_t>(npts) * ncoef, 0.0);
  for (int q = 0; q < npts; ++q)
    for (int l = 0; l < ncoef; ++l) {
      val[q * ncoef + l] = Basis1D::phi(l, pts[q]);
      if (dval) (*dval)[q * ncoef + l] = Basis1D::dphi(l, pts[q]);
    }
}

std::vector<double> merge_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SchemeTables1D make_tables_1d(int k, int n_gauss) {
  SchemeTables1D t;
  t.k = k;
  t.ncoef = k + 1;
  t.N = n_gauss > 0 ? n_gauss : k + 1;
  t.L = (k + 3 + 1) / 2;  // ceil((k+3)/2)
  if (t.L < 2) t.L = 2;

  QuadRule g = gauss_rule_ref(t.N);
  QuadRule lob = lobatto_rule_ref(t.L);
  t.w1hat = lob.weights.front();

  mirrored_points(g, t.gx, t.gw);
  {
    std::vector<double> lw;
    mirrored_points(lob, t.lob_x, lw);
  }

  basis_rows_1d(t.gx, t.ncoef, t.B, &t.Bx);

  // Opposite cell: left-half points shift by +1, right-half by -1.
  t.Bopp.assign(static_cast<size_t>(2 * t.N) * t.ncoef, 0.0);
  t.Boppx.assign(static_cast<size_t>(2 * t.N) * t.ncoef, 0.0);
  for (int q = 0; q < 2 * t.N; ++q) {
    double xi = q < t.N ? t.gx[q] + 1.0 : t.gx[q] - 1.0;
    for (int l = 0; l < t.ncoef; ++l) {
      t.Bopp[q * t.ncoef + l] = Basis1D::phi(l, xi);
      t.Boppx[q * t.ncoef + l] = Basis1D::dphi(l, xi);
    }
  }

  t.Bctr.resize(t.ncoef);
  t.Bleft.resize(t.ncoef);
  t.Bright.resize(t.ncoef);
  for (int l = 0; l < t.ncoef; ++l) {
    t.Bctr[l] = Basis1D::phi(l, 0.0);
    t.Bleft[l] = Basis1D::phi(l, -1.0);
    t.Bright[l] = Basis1D::phi(l, 1.0);
  }

  // S_j: Gauss and Lobatto points of both halves.
  {
    std::vector<double> s = t.gx;
    s.insert(s.end(), t.lob_x.begin(), t.lob_x.end());
    t.sx = merge_unique(std::move(s));
    basis_rows_1d(t.sx, t.ncoef, t.BS, nullptr);
  }

  // Shift expansions for the compact WENO rebuild.
  t.Tp.assign(static_cast<size_t>(t.ncoef) * t.ncoef, 0.0);
  t.Tm.assign(static_cast<size_t>(t.ncoef) * t.ncoef, 0.0);
  const double tp[4][4] = {{1, 2, 4, 8.8},
                           {0, 1, 4, 12},
                           {0, 0, 1, 6},
                           {0, 0, 0, 1}};
  for (int m = 0; m < t.ncoef; ++m)
    for (int l = 0; l < t.ncoef; ++l) {
      t.Tp[m * t.ncoef + l] = tp[m][l];
      t.Tm[m * t.ncoef + l] = ((l + m) % 2 == 0 ? 1.0 : -1.0) * tp[m][l];
    }
  return t;
}

SchemeTables2D make_tables_2d(int k, int n_gauss) {
  SchemeTables2D t;
  t.k = k;
  t.t1 = make_tables_1d(k, n_gauss);
  t.N = t.t1.N;
  t.L = t.t1.L;
  Basis2D b2(k);
  t.ncoef = b2.size();
  int nq = 2 * t.N;
  int nvol = nq * nq;

  t.wvol.assign(nvol, 0.0);
  t.V.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  t.Vx.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  t.Vy.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  t.Vopp.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  t.VoppX.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  t.VoppY.assign(static_cast<size_t>(nvol) * t.ncoef, 0.0);
  for (int qx = 0; qx < nq; ++qx)
    for (int qy = 0; qy < nq; ++qy) {
      int idx = qx * nq + qy;
      double xi = t.t1.gx[qx], eta = t.t1.gx[qy];
      double xo = qx < t.N ? xi + 1.0 : xi - 1.0;
      double yo = qy < t.N ? eta + 1.0 : eta - 1.0;
      t.wvol[idx] = t.t1.gw[qx] * t.t1.gw[qy];
      for (int l = 0; l < t.ncoef; ++l) {
        t.V[idx * t.ncoef + l] = Basis2D::phi(l, xi, eta);
        t.Vx[idx * t.ncoef + l] = Basis2D::dphi_dxi(l, xi, eta);
        t.Vy[idx * t.ncoef + l] = Basis2D::dphi_deta(l, xi, eta);
        t.Vopp[idx * t.ncoef + l] = Basis2D::phi(l, xo, yo);
        t.VoppX[idx * t.ncoef + l] = Basis2D::dphi_dxi(l, xo, yo);
        t.VoppY[idx * t.ncoef + l] = Basis2D::dphi_deta(l, xo, yo);
      }
    }

  auto fill_edge = [&](std::vector<double>& own, std::vector<double>& opp,
                       bool x_edge) {
    own.assign(static_cast<size_t>(2) * nq * t.ncoef, 0.0);
    opp.assign(static_cast<size_t>(2) * nq * t.ncoef, 0.0);
    for (int side = 0; side < 2; ++side) {
      double fixed = side == 0 ? -1.0 : 1.0;
      for (int q = 0; q < nq; ++q) {
        double tang = t.t1.gx[q];
        double tang_o = q < t.N ? tang + 1.0 : tang - 1.0;
        double xi = x_edge ? fixed : tang;
        double eta = x_edge ? tang : fixed;
        // along the fixed direction the edge is the opposite cell's center
        double xo = x_edge ? 0.0 : tang_o;
        double yo = x_edge ? tang_o : 0.0;
        size_t at = (static_cast<size_t>(side) * nq + q) * t.ncoef;
        for (int l = 0; l < t.ncoef; ++l) {
          own[at + l] = Basis2D::phi(l, xi, eta);
          opp[at + l] = Basis2D::phi(l, xo, yo);
        }
      }
    }
  };
  fill_edge(t.ExOwn, t.ExOpp, true);
  fill_edge(t.EyOwn, t.EyOpp, false);

  // S_ij = union over quadrants of (Q x L) u (L x Q) u (Q x Q).
  std::vector<double> xs_g = t.t1.gx;
  std::vector<double> xs_l = merge_unique(t.t1.lob_x);
  std::vector<std::pair<double, double>> pts;
  auto add = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    for (double x : xs)
      for (double y : ys) pts.emplace_back(x, y);
  };
  add(xs_g, xs_l);
  add(xs_l, xs_g);
  add(xs_g, xs_g);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int ns = static_cast<int>(pts.size());
  t.sxy.assign(static_cast<size_t>(ns) * 2, 0.0);
  t.BS.assign(static_cast<size_t>(ns) * t.ncoef, 0.0);
  t.s_in_q.assign(ns, 0);
  auto is_gauss = [&](double x) {
    return std::find(xs_g.begin(), xs_g.end(), x) != xs_g.end();
  };
  for (int i = 0; i < ns; ++i) {
    t.sxy[2 * i] = pts[i].first;
    t.sxy[2 * i + 1] = pts[i].second;
    t.s_in_q[i] = is_gauss(pts[i].first) && is_gauss(pts[i].second) ? 1 : 0;
    for (int l = 0; l < t.ncoef; ++l)
      t.BS[i * t.ncoef + l] = Basis2D::phi(l, pts[i].first, pts[i].second);
  }

  // One-sided opposite-cell traces at the per-quadrant critical points
  // (Q x L) u (L x Q) u (Q x Q), one quadrant at a time.
  std::vector<double> half_g(t.t1.gx.begin() + t.N, t.t1.gx.end());
  std::vector<double> half_l(t.t1.lob_x.begin() + t.L, t.t1.lob_x.end());
  auto in = [](const std::vector<double>& v, double x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::vector<double> half_s = half_g;
  half_s.insert(half_s.end(), half_l.begin(), half_l.end());
  half_s = merge_unique(std::move(half_s));
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (double px : half_s)
        for (double py : half_s) {
          bool gx_pt = in(half_g, px), gy_pt = in(half_g, py);
          bool lx_pt = in(half_l, px), ly_pt = in(half_l, py);
          if (!((gx_pt && ly_pt) || (lx_pt && gy_pt) || (gx_pt && gy_pt)))
            continue;
          double x = sx == 0 ? -px : px;
          double y = sy == 0 ? -py : py;
          double xo = sx == 0 ? x + 1.0 : x - 1.0;
          double yo = sy == 0 ? y + 1.0 : y - 1.0;
          t.so_quad.push_back(static_cast<std::uint8_t>(sx * 2 + sy));
          for (int l = 0; l < t.ncoef; ++l)
            t.so_rows.push_back(Basis2D::phi(l, xo, yo));
        }
  return t;
}

}  // namespace cdgrav
