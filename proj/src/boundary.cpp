#include "cdgrav/boundary.hpp"

#include <cstring>

#include "cdgrav/basis.hpp"
#include "cdgrav/projection.hpp"

namespace cdgrav {

namespace {

void copy_cell(Field1D& u, int dst, int src) {
  std::memcpy(u.cell(dst), u.cell(src),
              sizeof(double) * u.n_comp * u.n_coef);
}

// Mirror a 1D cell about a wall: x-odd basis coefficients flip for even
// components, the normal momentum flips the even ones instead.
void mirror_cell_1d(Field1D& u, int dst, const double* src) {
  double* d = u.cell(dst);
  int nc = u.n_coef;
  for (int c = 0; c < u.n_comp; ++c) {
    double comp_sign = c == 1 ? -1.0 : 1.0;
    for (int l = 0; l < nc; ++l)
      d[c * nc + l] = comp_sign * Basis1D::parity(l) * src[c * nc + l];
  }
}

void project_exact_cell_1d(Field1D& u, int j, const Exact1D& exact, double t,
                           int ng) {
  FnMulti1D f = [&exact, t](double x, double* out) {
    State1 s = exact(x, t);
    out[0] = s.rho;
    out[1] = s.m;
    out[2] = s.E;
  };
  project_cell_multi(f, 3, u.center(j), u.dx, u.n_coef - 1, u.cell(j), true,
                     ng);
}

void fill_side_1d(Field1D& u, const Field1D* eq_same, BcKind kind, bool right,
                  const Exact1D& exact, double t, bool for_eq, int ng) {
  int n = u.n_cells;
  int g = u.ghost;
  bool dual = u.family == MeshFamily::dual;
  // evolved cells are 0..n-1; the dual family straddles the walls at cells 0
  // and n-1 (n = nx+1)
  int strad = right ? n - 1 : 0;
  switch (kind) {
    case BcKind::periodic: {
      int period = dual ? n - 1 : n;
      // the wall-straddling dual cell is an alias of the one a period away
      if (dual && right) copy_cell(u, n - 1, 0);
      for (int q = 1; q <= g; ++q) {
        int dst = right ? n - 1 + q : -q;
        copy_cell(u, dst, dst + (right ? -period : period));
      }
      break;
    }
    case BcKind::outflow: {
      int src = right ? n - 1 : 0;
      for (int q = 1; q <= g; ++q)
        copy_cell(u, right ? n - 1 + q : -q, src);
      break;
    }
    case BcKind::reflective: {
      if (dual) {
        // symmetrize the wall-centered cell
        double* c = u.cell(strad);
        int nc = u.n_coef;
        for (int comp = 0; comp < u.n_comp; ++comp) {
          double comp_sign = comp == 1 ? -1.0 : 1.0;
          for (int l = 0; l < nc; ++l)
            if (comp_sign * Basis1D::parity(l) < 0.0) c[comp * nc + l] = 0.0;
        }
      }
      for (int q = 1; q <= g; ++q) {
        int dst = right ? n - 1 + q : -q;
        int src = dual ? (right ? n - 1 - q : q) : (right ? n - q : q - 1);
        mirror_cell_1d(u, dst, u.cell(src));
      }
      break;
    }
    case BcKind::dirichlet_exact: {
      if (for_eq) break;
      int lo = right ? (dual ? n - 1 : n) : -g;
      int hi = right ? n - 1 + g : (dual ? 0 : -1);
      for (int j = lo; j <= hi; ++j) project_exact_cell_1d(u, j, exact, t, ng);
      break;
    }
    case BcKind::dirichlet_equilibrium: {
      if (for_eq) break;
      int nc = u.n_comp * u.n_coef;
      int lo = right ? (dual ? n - 1 : n) : -g;
      int hi = right ? n - 1 + g : (dual ? 0 : -1);
      for (int j = lo; j <= hi; ++j)
        std::memcpy(u.cell(j), eq_same->cell(j), sizeof(double) * nc);
      break;
    }
  }
}

}  // namespace

void apply_boundary(Field1D& u, const Field1D* eq_same,
                    const BoundarySpec1D& bc, double time, bool for_eq,
                    int n_gauss, bool skip_dirichlet) {
  auto skip = [&](BcKind kind) {
    return skip_dirichlet && (kind == BcKind::dirichlet_exact ||
                              kind == BcKind::dirichlet_equilibrium);
  };
  if (!skip(bc.left))
    fill_side_1d(u, eq_same, bc.left, false, bc.exact, time, for_eq, n_gauss);
  if (!skip(bc.right))
    fill_side_1d(u, eq_same, bc.right, true, bc.exact, time, for_eq, n_gauss);
}

namespace {

void copy_cell(Field2D& u, int di, int dj, int si, int sj) {
  std::memcpy(u.cell(di, dj), u.cell(si, sj),
              sizeof(double) * u.n_comp * u.n_coef);
}

// Mirror about a wall normal to x (x_dir) or y.
void mirror_cell_2d(Field2D& u, int di, int dj, const double* src,
                    bool x_dir) {
  double* d = u.cell(di, dj);
  int nc = u.n_coef;
  int flip_comp = x_dir ? 1 : 2;
  for (int c = 0; c < u.n_comp; ++c) {
    double comp_sign = c == flip_comp ? -1.0 : 1.0;
    for (int l = 0; l < nc; ++l) {
      double par = x_dir ? Basis2D::parity_x(l) : Basis2D::parity_y(l);
      d[c * nc + l] = comp_sign * par * src[c * nc + l];
    }
  }
}

void symmetrize_cell_2d(Field2D& u, int i, int j, bool x_dir) {
  double* c = u.cell(i, j);
  int nc = u.n_coef;
  int flip_comp = x_dir ? 1 : 2;
  for (int comp = 0; comp < u.n_comp; ++comp) {
    double comp_sign = comp == flip_comp ? -1.0 : 1.0;
    for (int l = 0; l < nc; ++l) {
      double par = x_dir ? Basis2D::parity_x(l) : Basis2D::parity_y(l);
      if (comp_sign * par < 0.0) c[comp * nc + l] = 0.0;
    }
  }
}

void project_exact_cell_2d(Field2D& u, int i, int j, const Exact2D& exact,
                           double t, int ng) {
  int k = 0;
  while ((k + 1) * (k + 2) / 2 < u.n_coef) ++k;
  FnMulti2D f = [&exact, t](double x, double y, double* out) {
    State2 s = exact(x, y, t);
    out[0] = s.rho;
    out[1] = s.m1;
    out[2] = s.m2;
    out[3] = s.E;
  };
  project_cell_multi(f, 4, u.center_x(i), u.center_y(j), u.dx, u.dy, k,
                     u.cell(i, j), true, ng);
}

// One side normal to x (x_dir) or y; lo/hi give the tangential index range.
void fill_side_2d(Field2D& u, const Field2D* eq_same, BcKind kind, bool x_dir,
                  bool high, int lo, int hi, const Exact2D& exact, double t,
                  bool for_eq, int ng) {
  int n = x_dir ? u.nx : u.ny;
  int g = u.ghost;
  bool dual = u.family == MeshFamily::dual;
  auto at = [&](int normal, int tang) {
    return x_dir ? std::pair<int, int>{normal, tang}
                 : std::pair<int, int>{tang, normal};
  };
  switch (kind) {
    case BcKind::periodic: {
      int period = dual ? n - 1 : n;
      for (int tg = lo; tg <= hi; ++tg) {
        if (dual && high) {
          auto [di, dj] = at(n - 1, tg);
          auto [si, sj] = at(0, tg);
          copy_cell(u, di, dj, si, sj);
        }
        for (int q = 1; q <= g; ++q) {
          int normal = high ? n - 1 + q : -q;
          auto [di, dj] = at(normal, tg);
          auto [si, sj] = at(normal + (high ? -period : period), tg);
          copy_cell(u, di, dj, si, sj);
        }
      }
      break;
    }
    case BcKind::outflow: {
      for (int tg = lo; tg <= hi; ++tg)
        for (int q = 1; q <= g; ++q) {
          auto [di, dj] = at(high ? n - 1 + q : -q, tg);
          auto [si, sj] = at(high ? n - 1 : 0, tg);
          copy_cell(u, di, dj, si, sj);
        }
      break;
    }
    case BcKind::reflective: {
      for (int tg = lo; tg <= hi; ++tg) {
        if (dual) {
          auto [i, j] = at(high ? n - 1 : 0, tg);
          symmetrize_cell_2d(u, i, j, x_dir);
        }
        for (int q = 1; q <= g; ++q) {
          int src_n = dual ? (high ? n - 1 - q : q) : (high ? n - q : q - 1);
          auto [di, dj] = at(high ? n - 1 + q : -q, tg);
          auto [si, sj] = at(src_n, tg);
          mirror_cell_2d(u, di, dj, u.cell(si, sj), x_dir);
        }
      }
      break;
    }
    case BcKind::dirichlet_exact: {
      if (for_eq) break;
      int nlo = high ? (dual ? n - 1 : n) : -g;
      int nhi = high ? n - 1 + g : (dual ? 0 : -1);
      for (int tg = lo; tg <= hi; ++tg)
        for (int nn = nlo; nn <= nhi; ++nn) {
          auto [i, j] = at(nn, tg);
          project_exact_cell_2d(u, i, j, exact, t, ng);
        }
      break;
    }
    case BcKind::dirichlet_equilibrium: {
      if (for_eq) break;
      int bytes = sizeof(double) * u.n_comp * u.n_coef;
      int nlo = high ? (dual ? n - 1 : n) : -g;
      int nhi = high ? n - 1 + g : (dual ? 0 : -1);
      for (int tg = lo; tg <= hi; ++tg)
        for (int nn = nlo; nn <= nhi; ++nn) {
          auto [i, j] = at(nn, tg);
          std::memcpy(u.cell(i, j), eq_same->cell(i, j), bytes);
        }
      break;
    }
  }
}

}  // namespace

void apply_boundary(Field2D& u, const Field2D* eq_same,
                    const BoundarySpec2D& bc, double time, bool for_eq,
                    int n_gauss, bool skip_dirichlet) {
  auto skip = [&](BcKind kind) {
    return skip_dirichlet && (kind == BcKind::dirichlet_exact ||
                              kind == BcKind::dirichlet_equilibrium);
  };
  // x sides over the evolved rows, then y sides over the full width so the
  // corners compose the two rules
  if (!skip(bc.left))
    fill_side_2d(u, eq_same, bc.left, true, false, 0, u.ny - 1, bc.exact, time,
                 for_eq, n_gauss);
  if (!skip(bc.right))
    fill_side_2d(u, eq_same, bc.right, true, true, 0, u.ny - 1, bc.exact, time,
                 for_eq, n_gauss);
  if (!skip(bc.bottom))
    fill_side_2d(u, eq_same, bc.bottom, false, false, -u.ghost,
                 u.nx - 1 + u.ghost, bc.exact, time, for_eq, n_gauss);
  if (!skip(bc.top))
    fill_side_2d(u, eq_same, bc.top, false, true, -u.ghost, u.nx - 1 + u.ghost,
                 bc.exact, time, for_eq, n_gauss);
}

}  // namespace cdgrav
