#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cdgrav/field.hpp"
#include "cdgrav/mesh.hpp"
#include "cdgrav/tables.hpp"

using namespace cdgrav;

TEST_CASE("1D mesh geometry") {
  Mesh1D m(0.0, 2.0, 4);
  CHECK(m.dx == doctest::Approx(0.5));
  CHECK(m.primal_center(0) == doctest::Approx(0.25));
  CHECK(m.primal_center(3) == doctest::Approx(1.75));
  // dual cell between the centers 0.75 and 1.25
  CHECK(m.dual_center(2) == doctest::Approx(1.0));
  auto [left, right] = m.overlap_halves(2);
  CHECK(left.first == doctest::Approx(0.75));
  CHECK(left.second == doctest::Approx(1.0));
  CHECK(right.second == doctest::Approx(1.25));
  CHECK(m.n_dual() == 5);
  CHECK_THROWS_AS(Mesh1D(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.overlap_halves(99), std::logic_error);

  // cell measures tile the domain exactly
  double sum = 0.0;
  for (int j = 0; j < m.nx; ++j) sum += m.dx;
  CHECK(sum == 2.0);
}

TEST_CASE("2D mesh quadrants") {
  Mesh2D m(0.0, 1.0, 0.0, 1.0, 2, 2);
  // upper-right quadrant of the first primal cell
  double xc = m.primal_center_x(0), yc = m.primal_center_y(0);
  CHECK(xc == doctest::Approx(0.25));
  CHECK(xc + 0.5 * m.dx == doctest::Approx(0.5));
  CHECK(yc == doctest::Approx(0.25));
  CHECK(m.dual_center_x(1) == doctest::Approx(0.5));
}

TEST_CASE("field storage and evaluation") {
  Mesh1D m(0.0, 1.0, 8);
  Field1D f;
  f.resize(MeshFamily::primal, m, 2, 3, 3);
  CHECK(f.n_cells == 8);
  double* c = f.cell(3);
  c[0] = 2.0;  // rho average
  c[1] = 0.5;
  c[2] = -0.25;
  CHECK(f.average(3, 0) == 2.0);
  double xi = 0.3;
  CHECK(f.eval(3, 0, xi) ==
        doctest::Approx(2.0 + 0.5 * xi + (-0.25) * (xi * xi - 1.0 / 3.0)));
  // ghost indexing does not alias evolved cells
  f.cell(-2)[0] = 7.0;
  CHECK(f.average(0, 0) == 0.0);

  Field1D d;
  d.resize(MeshFamily::dual, m, 1, 3, 3);
  CHECK(d.n_cells == 9);
  CHECK(d.center(0) == doctest::Approx(0.0));
  CHECK(d.center(8) == doctest::Approx(1.0));
}

TEST_CASE("critical point sets cover both half cells") {
  SchemeTables1D t = make_tables_1d(2);
  // S_j holds both endpoints and the midpoint, inside the closed cell
  bool has_left = false, has_mid = false, has_right = false;
  for (double x : t.sx) {
    CHECK(x >= -1.0);
    CHECK(x <= 1.0);
    if (x == -1.0) has_left = true;
    if (x == 0.0) has_mid = true;
    if (x == 1.0) has_right = true;
  }
  CHECK(has_left);
  CHECK(has_mid);
  CHECK(has_right);
  // every half-cell Gauss and Lobatto point is represented
  for (double x : t.gx)
    CHECK(std::count(t.sx.begin(), t.sx.end(), x) == 1);
  for (double x : t.lob_x)
    CHECK(std::count(t.sx.begin(), t.sx.end(), x) == 1);
  // k=2: half midpoints coincide between the two rules
  CHECK(t.n_s() == 9);

  SchemeTables2D t2 = make_tables_2d(2);
  int gauss = 0;
  for (auto m : t2.s_in_q) gauss += m;
  CHECK(gauss == 4 * t2.N * t2.N);  // the tensor Gauss subset
  for (int s = 0; s < t2.n_s(); ++s) {
    CHECK(t2.sxy[2 * s] >= -1.0);
    CHECK(t2.sxy[2 * s] <= 1.0);
  }
}
