#include "cdgrav/projection.hpp"

#include "cdgrav/quadrature.hpp"

namespace cdgrav {

namespace {

// int over (-1,0) of Phi_l dxi; the (0,1) integral flips sign on odd l.
constexpr double kHalfInt[4] = {1.0, -0.5, 0.0, 0.05};

struct HalfRule {
  // nodes on (0,1) and weights summing to one
  std::vector<double> t, w;
};

HalfRule make_half_rule(int k, int n_gauss) {
  int n = n_gauss > 0 ? n_gauss : k + 3;
  QuadRule g = gauss_rule_ref(n);
  HalfRule h;
  h.t.resize(n);
  h.w = g.weights;
  for (int i = 0; i < n; ++i) h.t[i] = 0.5 + 0.5 * g.nodes[i];
  return h;
}

// rebuilt only when (k, n_gauss) changes; ghost fills call this per cell
const HalfRule& half_rule(int k, int n_gauss) {
  thread_local int ck = -1, cn = -1;
  thread_local HalfRule rule;
  if (ck != k || cn != n_gauss) {
    rule = make_half_rule(k, n_gauss);
    ck = k;
    cn = n_gauss;
  }
  return rule;
}

}  // namespace

void project_l2_cell(const Fn1D& f, double xc, double dx, int k, double* coef,
                     int n_gauss) {
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  for (int l = 0; l <= k; ++l) coef[l] = 0.0;
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < n; ++i) {
      double xi = side == 0 ? h.t[i] - 1.0 : h.t[i];
      double fv = f(xc + 0.5 * dx * xi);
      for (int l = 0; l <= k; ++l)
        coef[l] += h.w[i] * fv * Basis1D::phi(l, xi);
    }
  // moments carry the (dx/2) quadrature factor and the 1/(dx cnorm) mass
  // inverse, leaving 1/(2 cnorm)
  for (int l = 0; l <= k; ++l) coef[l] /= 2.0 * Basis1D::cnorm(l);
}

void project_novel_cell(const Fn1D& f, double xc, double dx, int k,
                        double* coef, int n_gauss) {
  project_l2_cell(f, xc, dx, k, coef, n_gauss);
  if (k < 1) return;
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  // (1/dx) * int_{I^-} f dx
  double mean_minus = 0.0;
  for (int i = 0; i < n; ++i)
    mean_minus += h.w[i] * f(xc + 0.5 * dx * (h.t[i] - 1.0));
  mean_minus *= 0.5;
  double resid = mean_minus;
  for (int l = 0; l <= k; ++l)
    if (l != 1) resid -= coef[l] * 0.5 * kHalfInt[l];
  // int_{I^-} Phi_1 dx = -dx/4
  coef[1] = resid / -0.25;
}

void project_l2_cell(const Fn2D& f, double xc, double yc, double dx, double dy,
                     int k, double* coef, int n_gauss) {
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  Basis2D b2(k);
  int nc = b2.size();
  for (int l = 0; l < nc; ++l) coef[l] = 0.0;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double xi = sx == 0 ? h.t[i] - 1.0 : h.t[i];
          double eta = sy == 0 ? h.t[j] - 1.0 : h.t[j];
          double fv = f(xc + 0.5 * dx * xi, yc + 0.5 * dy * eta);
          double ww = h.w[i] * h.w[j];
          for (int l = 0; l < nc; ++l)
            coef[l] += ww * fv * Basis2D::phi(l, xi, eta);
        }
  for (int l = 0; l < nc; ++l) coef[l] /= 4.0 * Basis2D::cnorm(l);
}

void project_novel_cell(const Fn2D& f, double xc, double yc, double dx,
                        double dy, int k, double* coef, int n_gauss) {
  project_l2_cell(f, xc, yc, dx, dy, k, coef, n_gauss);
  if (k < 1) return;
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  Basis2D b2(k);
  int nc = b2.size();
  // quadrant means of f, m = 0,1,2 (lower-left, lower-right, upper-left)
  double b[3];
  const int sgn_x[3] = {-1, 1, -1};
  const int sgn_y[3] = {-1, -1, 1};
  for (int m = 0; m < 3; ++m) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double xi = sgn_x[m] < 0 ? h.t[i] - 1.0 : h.t[i];
        double eta = sgn_y[m] < 0 ? h.t[j] - 1.0 : h.t[j];
        acc += h.w[i] * h.w[j] * f(xc + 0.5 * dx * xi, yc + 0.5 * dy * eta);
      }
    // (1/(dx dy)) int_{quadrant} f = acc / 4
    b[m] = acc * 0.25;
    for (int l = 0; l < nc; ++l) {
      if (l >= 1 && l <= 3) continue;
      auto [pa, pb] = Basis2D::pair(l);
      double qa = sgn_x[m] < 0 ? kHalfInt[pa]
                               : (pa % 2 == 0 ? kHalfInt[pa] : -kHalfInt[pa]);
      double qb = sgn_y[m] < 0 ? kHalfInt[pb]
                               : (pb % 2 == 0 ? kHalfInt[pb] : -kHalfInt[pb]);
      b[m] -= coef[l] * 0.25 * qa * qb;
    }
  }
  coef[1] = -4.0 * (b[0] + b[2]);
  coef[2] = -4.0 * (b[0] + b[1]);
  if (nc > 3) coef[3] = -8.0 * (b[1] + b[2]);
}

void project_cell_multi(const FnMulti1D& f, int n_comp, double xc, double dx,
                        int k, double* coef, bool novel, int n_gauss) {
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  int nc = k + 1;
  for (int i = 0; i < n_comp * nc; ++i) coef[i] = 0.0;
  double vals[8];
  double mean_minus[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < n; ++i) {
      double xi = side == 0 ? h.t[i] - 1.0 : h.t[i];
      f(xc + 0.5 * dx * xi, vals);
      for (int c = 0; c < n_comp; ++c) {
        for (int l = 0; l <= k; ++l)
          coef[c * nc + l] += h.w[i] * vals[c] * Basis1D::phi(l, xi);
        if (side == 0) mean_minus[c] += 0.5 * h.w[i] * vals[c];
      }
    }
  for (int c = 0; c < n_comp; ++c)
    for (int l = 0; l <= k; ++l) coef[c * nc + l] /= 2.0 * Basis1D::cnorm(l);
  if (novel && k >= 1)
    for (int c = 0; c < n_comp; ++c) {
      double resid = mean_minus[c];
      for (int l = 0; l <= k; ++l)
        if (l != 1) resid -= coef[c * nc + l] * 0.5 * kHalfInt[l];
      coef[c * nc + 1] = resid / -0.25;
    }
}

void project_cell_multi(const FnMulti2D& f, int n_comp, double xc, double yc,
                        double dx, double dy, int k, double* coef, bool novel,
                        int n_gauss) {
  const HalfRule& h = half_rule(k, n_gauss);
  int n = static_cast<int>(h.t.size());
  Basis2D b2(k);
  int nc = b2.size();
  // basis values at the tensor quadrature points, rebuilt with the rule
  thread_local int ck = -1, cn = -1;
  thread_local std::vector<double> brows;
  if (ck != k || cn != n) {
    brows.assign(static_cast<size_t>(4) * n * n * nc, 0.0);
    for (int sx = 0; sx < 2; ++sx)
      for (int sy = 0; sy < 2; ++sy)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double xi = sx == 0 ? h.t[i] - 1.0 : h.t[i];
            double eta = sy == 0 ? h.t[j] - 1.0 : h.t[j];
            size_t at = ((static_cast<size_t>(sx * 2 + sy) * n + i) * n + j) * nc;
            for (int l = 0; l < nc; ++l)
              brows[at + l] = Basis2D::phi(l, xi, eta);
          }
    ck = k;
    cn = n;
  }
  for (int i = 0; i < n_comp * nc; ++i) coef[i] = 0.0;
  double vals[8];
  double quad_mean[8 * 3] = {0};
  const int sgn_x[3] = {-1, 1, -1};
  const int sgn_y[3] = {-1, -1, 1};
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy) {
      int m = sx == 0 ? (sy == 0 ? 0 : 2) : (sy == 0 ? 1 : -1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double xi = sx == 0 ? h.t[i] - 1.0 : h.t[i];
          double eta = sy == 0 ? h.t[j] - 1.0 : h.t[j];
          const double* row =
              &brows[((static_cast<size_t>(sx * 2 + sy) * n + i) * n + j) * nc];
          f(xc + 0.5 * dx * xi, yc + 0.5 * dy * eta, vals);
          double ww = h.w[i] * h.w[j];
          for (int c = 0; c < n_comp; ++c) {
            double wv = ww * vals[c];
            for (int l = 0; l < nc; ++l) coef[c * nc + l] += wv * row[l];
            if (m >= 0) quad_mean[c * 3 + m] += 0.25 * ww * vals[c];
          }
        }
    }
  for (int c = 0; c < n_comp; ++c)
    for (int l = 0; l < nc; ++l) coef[c * nc + l] /= 4.0 * Basis2D::cnorm(l);
  if (novel && k >= 1)
    for (int c = 0; c < n_comp; ++c) {
      double b[3];
      for (int m = 0; m < 3; ++m) {
        b[m] = quad_mean[c * 3 + m];
        for (int l = 0; l < nc; ++l) {
          if (l >= 1 && l <= 3) continue;
          auto [pa, pb] = Basis2D::pair(l);
          double qa = sgn_x[m] < 0
                          ? kHalfInt[pa]
                          : (pa % 2 == 0 ? kHalfInt[pa] : -kHalfInt[pa]);
          double qb = sgn_y[m] < 0
                          ? kHalfInt[pb]
                          : (pb % 2 == 0 ? kHalfInt[pb] : -kHalfInt[pb]);
          b[m] -= coef[c * nc + l] * 0.25 * qa * qb;
        }
      }
      coef[c * nc + 1] = -4.0 * (b[0] + b[2]);
      coef[c * nc + 2] = -4.0 * (b[0] + b[1]);
      if (nc > 3) coef[c * nc + 3] = -8.0 * (b[1] + b[2]);
    }
}

void project_field(const Fn1D& f, Field1D& out, int comp, int j0, int j1,
                   bool novel, int n_gauss) {
  for (int j = j0; j < j1; ++j) {
    double* c = out.cell(j) + comp * out.n_coef;
    if (novel)
      project_novel_cell(f, out.center(j), out.dx, out.n_coef - 1, c, n_gauss);
    else
      project_l2_cell(f, out.center(j), out.dx, out.n_coef - 1, c, n_gauss);
  }
}

void project_field(const Fn2D& f, Field2D& out, int comp, int i0, int i1,
                   int j0, int j1, bool novel, int n_gauss) {
  int k = 0;
  while ((k + 1) * (k + 2) / 2 < out.n_coef) ++k;
  for (int j = j0; j < j1; ++j)
    for (int i = i0; i < i1; ++i) {
      double* c = out.cell(i, j) + comp * out.n_coef;
      if (novel)
        project_novel_cell(f, out.center_x(i), out.center_y(j), out.dx, out.dy,
                           k, c, n_gauss);
      else
        project_l2_cell(f, out.center_x(i), out.center_y(j), out.dx, out.dy, k,
                        c, n_gauss);
    }
}

}  // namespace cdgrav
