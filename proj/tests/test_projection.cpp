#include <doctest.h>

#include <cmath>
#include <random>

#include "cdgrav/field.hpp"
#include "cdgrav/projection.hpp"
#include "cdgrav/quadrature.hpp"

using namespace cdgrav;

namespace {

double ref_integral(const Fn1D& f, double a, double b) {
  // composite 12-point Gauss reference quadrature
  QuadRule g = gauss_rule_ref(12);
  double total = 0.0;
  int pieces = 8;
  double h = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    double lo = a + p * h;
    for (size_t q = 0; q < g.nodes.size(); ++q)
      total += h * g.weights[q] * f(lo + 0.5 * h * (g.nodes[q] + 1.0));
  }
  return total;
}

double cell_L2(const Fn1D& f, double a, double b) {
  return std::sqrt(ref_integral([&](double x) { return f(x) * f(x); }, a, b));
}

}  // namespace

TEST_CASE("novel projection reproduces members of the space") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k <= 3; ++k) {
    std::vector<double> c(k + 1), out(k + 1);
    for (double& v : c) v = u(rng);
    double xc = 0.7, dx = 0.3;
    Fn1D g = [&](double x) {
      double xi = 2.0 * (x - xc) / dx, v = 0.0;
      for (int l = 0; l <= k; ++l) v += c[l] * Basis1D::phi(l, xi);
      return v;
    };
    project_novel_cell(g, xc, dx, k, out.data());
    for (int l = 0; l <= k; ++l)
      CHECK(out[l] == doctest::Approx(c[l]).epsilon(1e-13));
    project_l2_cell(g, xc, dx, k, out.data());
    for (int l = 0; l <= k; ++l)
      CHECK(out[l] == doctest::Approx(c[l]).epsilon(1e-13));
  }
}

TEST_CASE("constant projects to its average") {
  double out[4];
  project_novel_cell([](double) { return 3.25; }, 0.0, 0.5, 3, out);
  CHECK(out[0] == doctest::Approx(3.25).epsilon(1e-14));
  for (int l = 1; l <= 3; ++l) CHECK(std::abs(out[l]) <= 1e-14);
}

TEST_CASE("half-cell means are preserved") {
  Fn1D f = [](double x) { return std::exp(-x); };
  for (int k = 1; k <= 3; ++k) {
    double xc = 0.4, dx = 0.2;
    std::vector<double> c(k + 1);
    project_novel_cell(f, xc, dx, k, c.data());
    auto poly = [&](double x) {
      double xi = 2.0 * (x - xc) / dx, v = 0.0;
      for (int l = 0; l <= k; ++l) v += c[l] * Basis1D::phi(l, xi);
      return v;
    };
    double lo = xc - 0.5 * dx;
    double want_minus = ref_integral(f, lo, xc);
    double got_minus = ref_integral(poly, lo, xc);
    CHECK(got_minus == doctest::Approx(want_minus).epsilon(1e-13));
    double want_plus = ref_integral(f, xc, xc + 0.5 * dx);
    double got_plus = ref_integral(poly, xc, xc + 0.5 * dx);
    CHECK(got_plus == doctest::Approx(want_plus).epsilon(1e-13));
  }
}

TEST_CASE("primal and dual projections share cell averages") {
  // eq (ave:ID): averages agree on both families, checked on exp(-x)
  Mesh1D m(0.0, 1.0, 10);
  Fn1D f = [](double x) { return std::exp(-x); };
  int k = 2;
  Field1D C, D;
  C.resize(MeshFamily::primal, m, 1, 1, k + 1);
  D.resize(MeshFamily::dual, m, 1, 1, k + 1);
  project_field(f, C, 0, -1, C.n_cells + 1, true);
  project_field(f, D, 0, -1, D.n_cells + 1, true);
  for (int j = 0; j < m.nx; ++j) {
    // integral of the dual projection over primal cell j from its two halves
    auto dpoly_l = [&](double x) {
      return D.eval(j, 0, 2.0 * (x - D.center(j)) / m.dx);
    };
    auto dpoly_r = [&](double x) {
      return D.eval(j + 1, 0, 2.0 * (x - D.center(j + 1)) / m.dx);
    };
    double a = m.x_min + j * m.dx, c = a + 0.5 * m.dx, b = a + m.dx;
    double dual_int = ref_integral(dpoly_l, a, c) + ref_integral(dpoly_r, c, b);
    double primal_int = C.average(j, 0) * m.dx;
    CHECK(dual_int == doctest::Approx(primal_int).epsilon(1e-13));
  }
}

TEST_CASE("idempotence and linearity") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int k = 2;
  double xc = 0.0, dx = 0.8;
  for (int trial = 0; trial < 40; ++trial) {
    double a1 = u(rng), a2 = u(rng), w1 = u(rng), w2 = u(rng);
    Fn1D f1 = [=](double x) { return std::sin(3.0 * x + a1); };
    Fn1D f2 = [=](double x) { return std::exp(a2 * x); };
    double c1[3], c2[3], cc[3], cp[3];
    project_novel_cell(f1, xc, dx, k, c1);
    project_novel_cell(f2, xc, dx, k, c2);
    Fn1D comb = [&](double x) { return w1 * f1(x) + w2 * f2(x); };
    project_novel_cell(comb, xc, dx, k, cc);
    for (int l = 0; l <= k; ++l)
      CHECK(cc[l] == doctest::Approx(w1 * c1[l] + w2 * c2[l]).epsilon(1e-13));
    // P(P(f)) = P(f)
    Fn1D pf = [&](double x) {
      double xi = 2.0 * (x - xc) / dx, v = 0.0;
      for (int l = 0; l <= k; ++l) v += c1[l] * Basis1D::phi(l, xi);
      return v;
    };
    project_novel_cell(pf, xc, dx, k, cp);
    for (int l = 0; l <= k; ++l)
      CHECK(cp[l] == doctest::Approx(c1[l]).epsilon(1e-13));
  }
}

TEST_CASE("boundedness constant of the projection") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 1; k <= 3; ++k) {
    double bound = k + 2.0 * std::sqrt(6.0) / 3.0 * (k + 1);
    double xc = 0.25, dx = 0.5;
    for (int trial = 0; trial < 100; ++trial) {
      double a = u(rng), b = u(rng), w = 4.0 + 3.0 * u(rng);
      Fn1D f = [=](double x) { return a * std::sin(w * x) + b * std::cos(0.5 * w * x * x); };
      std::vector<double> c(k + 1);
      project_novel_cell(f, xc, dx, k, c.data());
      Fn1D pf = [&](double x) {
        double xi = 2.0 * (x - xc) / dx, v = 0.0;
        for (int l = 0; l <= k; ++l) v += c[l] * Basis1D::phi(l, xi);
        return v;
      };
      double lo = xc - 0.5 * dx, hi = xc + 0.5 * dx;
      CHECK(cell_L2(pf, lo, hi) <= bound * cell_L2(f, lo, hi) + 1e-14);
    }
  }
}

TEST_CASE("projection accuracy order") {
  Fn1D f = [](double x) { return std::exp(-x); };
  for (int k = 1; k <= 3; ++k) {
    std::vector<double> errs;
    for (int n : {10, 20, 40, 80}) {
      Mesh1D m(0.0, 1.0, n);
      Field1D F;
      F.resize(MeshFamily::primal, m, 0, 1, k + 1);
      project_field(f, F, 0, 0, n, true);
      double err2 = 0.0;
      for (int j = 0; j < n; ++j) {
        Fn1D diff = [&](double x) {
          return F.eval(j, 0, 2.0 * (x - F.center(j)) / m.dx) - f(x);
        };
        double lo = m.x_min + j * m.dx;
        err2 += ref_integral([&](double x) { return diff(x) * diff(x); }, lo,
                             lo + m.dx);
      }
      errs.push_back(std::sqrt(err2));
    }
    for (size_t i = 1; i < errs.size(); ++i) {
      double order = std::log2(errs[i - 1] / errs[i]);
      CHECK(order >= k + 0.8);
    }
    // k = 2 halving ratio close to 2^3
    if (k == 2) CHECK(errs[0] / errs[1] == doctest::Approx(8.0).epsilon(0.2));
  }
}

TEST_CASE("2D novel projection: members, quadrant means, identities") {
  int k = 2;
  Basis2D b2(k);
  int nc = b2.size();
  // member of the space reproduced exactly
  {
    std::vector<double> c(nc), out(nc);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : c) v = u(rng);
    double xc = 0.2, yc = -0.1, dx = 0.4, dy = 0.3;
    Fn2D g = [&](double x, double y) {
      double xi = 2.0 * (x - xc) / dx, eta = 2.0 * (y - yc) / dy, v = 0.0;
      for (int l = 0; l < nc; ++l) v += c[l] * Basis2D::phi(l, xi, eta);
      return v;
    };
    project_novel_cell(g, xc, yc, dx, dy, k, out.data());
    for (int l = 0; l < nc; ++l)
      CHECK(out[l] == doctest::Approx(c[l]).epsilon(1e-13));
  }
  // quadrant means preserved for a smooth function
  {
    Fn2D f = [](double x, double y) { return std::exp(-x - y); };
    double xc = 0.5, yc = 0.5, dx = 0.25, dy = 0.25;
    std::vector<double> c(nc);
    project_novel_cell(f, xc, yc, dx, dy, k, c.data());
    QuadRule g = gauss_rule_ref(10);
    for (int sx = 0; sx < 2; ++sx)
      for (int sy = 0; sy < 2; ++sy) {
        double want = 0.0, got = 0.0;
        for (size_t qx = 0; qx < g.nodes.size(); ++qx)
          for (size_t qy = 0; qy < g.nodes.size(); ++qy) {
            double xi = 0.5 * g.nodes[qx] + (sx ? 0.5 : -0.5);
            double eta = 0.5 * g.nodes[qy] + (sy ? 0.5 : -0.5);
            double w = g.weights[qx] * g.weights[qy];
            want += w * f(xc + 0.5 * dx * xi, yc + 0.5 * dy * eta);
            double v = 0.0;
            for (int l = 0; l < nc; ++l) v += c[l] * Basis2D::phi(l, xi, eta);
            got += w * v;
          }
        CHECK(got == doctest::Approx(want).epsilon(1e-13));
      }
  }
  // full-cell average identity across the families
  {
    Mesh2D m(0.0, 1.0, 0.0, 1.0, 4, 4);
    Fn2D f = [](double x, double y) { return std::exp(-x - y); };
    Field2D C, D;
    C.resize(MeshFamily::primal, m, 1, 1, nc);
    D.resize(MeshFamily::dual, m, 1, 1, nc);
    project_field(f, C, 0, -1, C.nx + 1, -1, C.ny + 1, true);
    project_field(f, D, 0, -1, D.nx + 1, -1, D.ny + 1, true);
    QuadRule g = gauss_rule_ref(6);
    for (int j = 0; j < m.ny; ++j)
      for (int i = 0; i < m.nx; ++i) {
        // quадrants of the primal cell against the four dual cells
        double dual_int = 0.0;
        for (int sx = 0; sx < 2; ++sx)
          for (int sy = 0; sy < 2; ++sy) {
            for (size_t qx = 0; qx < g.nodes.size(); ++qx)
              for (size_t qy = 0; qy < g.nodes.size(); ++qy) {
                double xi = 0.5 * g.nodes[qx] + (sx ? 0.5 : -0.5);
                double eta = 0.5 * g.nodes[qy] + (sy ? 0.5 : -0.5);
                double x = m.primal_center_x(i) + 0.5 * m.dx * xi;
                double y = m.primal_center_y(j) + 0.5 * m.dy * eta;
                int di = i + sx, dj = j + sy;
                double xid = 2.0 * (x - D.center_x(di)) / m.dx;
                double etad = 2.0 * (y - D.center_y(dj)) / m.dy;
                dual_int += 0.25 * g.weights[qx] * g.weights[qy] * m.dx *
                            m.dy * D.eval(di, dj, 0, xid, etad);
              }
          }
        double primal_int = C.average(i, j, 0) * m.dx * m.dy;
        CHECK(dual_int == doctest::Approx(primal_int).epsilon(1e-13));
      }
  }
}

TEST_CASE("2D projection accuracy order (empirical)") {
  Fn2D f = [](double x, double y) { return std::exp(-x - y); };
  for (int k = 2; k <= 3; ++k) {
    int nc = Basis2D(k).size();
    std::vector<double> errs;
    for (int n : {4, 8, 16, 32}) {
      Mesh2D m(0.0, 1.0, 0.0, 1.0, n, n);
      Field2D F;
      F.resize(MeshFamily::primal, m, 0, 1, nc);
      project_field(f, F, 0, 0, n, 0, n, true);
      QuadRule g = gauss_rule_ref(6);
      double err2 = 0.0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          for (size_t qx = 0; qx < g.nodes.size(); ++qx)
            for (size_t qy = 0; qy < g.nodes.size(); ++qy) {
              double xi = g.nodes[qx], eta = g.nodes[qy];
              double x = F.center_x(i) + 0.5 * m.dx * xi;
              double y = F.center_y(j) + 0.5 * m.dy * eta;
              double d = F.eval(i, j, 0, xi, eta) - f(x, y);
              err2 += g.weights[qx] * g.weights[qy] * m.dx * m.dy * d * d;
            }
      errs.push_back(std::sqrt(err2));
    }
    for (size_t i = 1; i < errs.size(); ++i)
      CHECK(std::log2(errs[i - 1] / errs[i]) >= k + 0.8);
  }
}
