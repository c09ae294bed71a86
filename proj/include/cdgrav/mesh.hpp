#ifndef CDGRAV_MESH_HPP_
#define CDGRAV_MESH_HPP_

#include <stdexcept>
#include <utility>

namespace cdgrav {

// Uniform overlapping meshes.  Primal cells are indexed j = 0..nx-1 with
// centers x_min + (j+1/2) dx.  Dual cells are indexed d = 0..nx with centers
// x_min + d dx, so d = 0 and d = nx straddle the domain boundary; the dual
// cell d covers the right half of primal cell d-1 and the left half of
// primal cell d.  Under periodic boundary conditions dual cell nx is an
// alias of dual cell 0.
struct Mesh1D {
  double x_min = 0.0, x_max = 1.0;
  int nx = 0;
  double dx = 0.0;

  Mesh1D() = default;
  Mesh1D(double a, double b, int n) : x_min(a), x_max(b), nx(n) {
    if (n < 2 || !(b > a)) throw std::invalid_argument("Mesh1D: bad extents");
    dx = (b - a) / n;
  }
  double primal_center(int j) const { return x_min + (j + 0.5) * dx; }
  double dual_center(int d) const { return x_min + d * dx; }
  int n_dual() const { return nx + 1; }

  // Half cells I_{d-1}^+ and I_d^- making up the dual cell d.
  std::pair<std::pair<double, double>, std::pair<double, double>>
  overlap_halves(int d) const {
    if (d < -1 || d > nx + 1) throw std::logic_error("overlap_halves: index");
    double c = dual_center(d);
    return {{c - 0.5 * dx, c}, {c, c + 0.5 * dx}};
  }
};

struct Mesh2D {
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  int nx = 0, ny = 0;
  double dx = 0, dy = 0;

  Mesh2D() = default;
  Mesh2D(double ax, double bx, double ay, double by, int n_x, int n_y)
      : x_min(ax), x_max(bx), y_min(ay), y_max(by), nx(n_x), ny(n_y) {
    if (nx < 2 || ny < 2 || !(bx > ax) || !(by > ay))
      throw std::invalid_argument("Mesh2D: bad extents");
    dx = (bx - ax) / nx;
    dy = (by - ay) / ny;
  }
  double primal_center_x(int i) const { return x_min + (i + 0.5) * dx; }
  double primal_center_y(int j) const { return y_min + (j + 0.5) * dy; }
  double dual_center_x(int i) const { return x_min + i * dx; }
  double dual_center_y(int j) const { return y_min + j * dy; }
  int n_dual_x() const { return nx + 1; }
  int n_dual_y() const { return ny + 1; }
};

}  // namespace cdgrav

#endif
