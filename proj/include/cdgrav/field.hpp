#ifndef CDGRAV_FIELD_HPP_
#define CDGRAV_FIELD_HPP_

#include <cassert>
#include <cstddef>
#include <vector>

#include "cdgrav/basis.hpp"
#include "cdgrav/mesh.hpp"

namespace cdgrav {

enum class MeshFamily { primal, dual };

// Modal coefficients of one solution copy: per cell, per component, in the
// scaled Legendre basis.  Ghost layers sit on both sides; evolved cells are
// indexed 0..n_cells-1 (the dual family includes the boundary straddlers).
struct Field1D {
  MeshFamily family = MeshFamily::primal;
  int n_cells = 0, ghost = 0, n_comp = 0, n_coef = 0;
  double dx = 0.0, center0 = 0.0;  // physical center of cell 0
  std::vector<double> a;

  void resize(MeshFamily fam, const Mesh1D& mesh, int ghosts, int comps,
              int coefs) {
    family = fam;
    n_cells = fam == MeshFamily::primal ? mesh.nx : mesh.n_dual();
    ghost = ghosts;
    n_comp = comps;
    n_coef = coefs;
    dx = mesh.dx;
    center0 = fam == MeshFamily::primal ? mesh.primal_center(0)
                                        : mesh.dual_center(0);
    a.assign(static_cast<size_t>(n_cells + 2 * ghost) * comps * coefs, 0.0);
  }
  double center(int j) const { return center0 + j * dx; }
  double* cell(int j) {
    assert(j >= -ghost && j < n_cells + ghost);
    return a.data() + static_cast<size_t>(j + ghost) * n_comp * n_coef;
  }
  const double* cell(int j) const {
    assert(j >= -ghost && j < n_cells + ghost);
    return a.data() + static_cast<size_t>(j + ghost) * n_comp * n_coef;
  }
  // Value of component c at local coordinate xi in cell j.
  double eval(int j, int c, double xi) const {
    const double* n = cell(j) + c * n_coef;
    double v = 0.0;
    for (int l = 0; l < n_coef; ++l) v += n[l] * Basis1D::phi(l, xi);
    return v;
  }
  double average(int j, int c) const { return cell(j)[c * n_coef]; }
};

struct Field2D {
  MeshFamily family = MeshFamily::primal;
  int nx = 0, ny = 0, ghost = 0, n_comp = 0, n_coef = 0;
  double dx = 0, dy = 0, cx0 = 0, cy0 = 0;
  std::vector<double> a;

  void resize(MeshFamily fam, const Mesh2D& mesh, int ghosts, int comps,
              int coefs) {
    family = fam;
    nx = fam == MeshFamily::primal ? mesh.nx : mesh.n_dual_x();
    ny = fam == MeshFamily::primal ? mesh.ny : mesh.n_dual_y();
    ghost = ghosts;
    n_comp = comps;
    n_coef = coefs;
    dx = mesh.dx;
    dy = mesh.dy;
    cx0 = fam == MeshFamily::primal ? mesh.primal_center_x(0)
                                    : mesh.dual_center_x(0);
    cy0 = fam == MeshFamily::primal ? mesh.primal_center_y(0)
                                    : mesh.dual_center_y(0);
    a.assign(static_cast<size_t>(nx + 2 * ghost) * (ny + 2 * ghost) * comps *
                 coefs,
             0.0);
  }
  double center_x(int i) const { return cx0 + i * dx; }
  double center_y(int j) const { return cy0 + j * dy; }
  size_t index(int i, int j) const {
    assert(i >= -ghost && i < nx + ghost && j >= -ghost && j < ny + ghost);
    return (static_cast<size_t>(j + ghost) * (nx + 2 * ghost) + (i + ghost)) *
           n_comp * n_coef;
  }
  double* cell(int i, int j) { return a.data() + index(i, j); }
  const double* cell(int i, int j) const { return a.data() + index(i, j); }
  double eval(int i, int j, int c, double xi, double eta) const {
    const double* n = cell(i, j) + c * n_coef;
    double v = 0.0;
    for (int l = 0; l < n_coef; ++l) v += n[l] * Basis2D::phi(l, xi, eta);
    return v;
  }
  double average(int i, int j, int c) const { return cell(i, j)[c * n_coef]; }
};

}  // namespace cdgrav

#endif
