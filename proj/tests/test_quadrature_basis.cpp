#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "cdgrav/basis.hpp"
#include "cdgrav/quadrature.hpp"
#include "cdgrav/tables.hpp"

using namespace cdgrav;

namespace {
double integrate(const QuadRule& r, double a, double b,
                 const std::function<double(double)>& f) {
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
  return (b - a) * s;
}
}  // namespace

TEST_CASE("gauss rule basics") {
  QuadRule r1 = gauss_rule(1, 0.0, 1.0);
  CHECK(r1.nodes[0] == doctest::Approx(0.5));
  CHECK(r1.weights[0] == doctest::Approx(1.0));

  QuadRule r2 = gauss_rule(2, -1.0, 1.0);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(r2.weights[0] == doctest::Approx(0.5));
  CHECK(r2.weights[1] == doctest::Approx(0.5));

  QuadRule r3 = gauss_rule(3, 0.0, 1.0);
  double v = integrate(r3, 0.0, 1.0, [](double x) { return std::pow(x, 5); });
  CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_rule(0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(3, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("lobatto rule basics") {
  QuadRule r2 = lobatto_rule(2, -1.0, 1.0);
  CHECK(r2.nodes[0] == -1.0);
  CHECK(r2.nodes[1] == 1.0);
  CHECK(r2.weights[0] == doctest::Approx(0.5));

  QuadRule r3 = lobatto_rule(3, -1.0, 1.0);
  CHECK(r3.nodes[1] == 0.0);
  CHECK(r3.weights[0] == doctest::Approx(1.0 / 6.0));
  CHECK(r3.weights[1] == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(lobatto_rule(1, 0.0, 1.0), std::invalid_argument);

  // endpoint weights equal bit for bit, nodes include the interval ends
  for (int n = 2; n <= 12; ++n) {
    QuadRule r = lobatto_rule_ref(n);
    CHECK(r.weights.front() == r.weights.back());
    CHECK(r.nodes.front() == -1.0);
    CHECK(r.nodes.back() == 1.0);
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("gauss exactness on random polynomials of degree 2N-1") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> c(2 * n);
      for (double& v : c) v = coef(rng);
      double a = -2.0 + coef(rng), b = 3.0 + coef(rng);
      auto poly = [&](double x) {
        double v = 0.0, xp = 1.0;
        for (double ci : c) {
          v += ci * xp;
          xp *= x;
        }
        return v;
      };
      double exact = 0.0;
      for (size_t p = 0; p < c.size(); ++p)
        exact +=
            c[p] * (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
      double got = integrate(gauss_rule(n, a, b), a, b, poly);
      CHECK(got == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("lobatto exactness up to degree 2L-3") {
  for (int n = 2; n <= 9; ++n) {
    QuadRule r = lobatto_rule(n, -1.0, 1.0);
    for (int deg = 0; deg <= 2 * n - 3; ++deg) {
      double got =
          integrate(r, -1.0, 1.0, [&](double x) { return std::pow(x, deg); });
      double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1.0);
      CHECK(got == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("scaled Legendre values and derivatives") {
  CHECK(Basis1D::phi(2, 0.0) == doctest::Approx(-1.0 / 3.0));
  CHECK(Basis1D::phi(1, 1.0) == 1.0);
  CHECK(Basis1D::dphi(3, 0.0) == doctest::Approx(-3.0 / 5.0));
  double h = 1e-6;
  for (int l = 0; l <= 3; ++l)
    for (double xi : {-0.7, 0.1, 0.9}) {
      double fd = (Basis1D::phi(l, xi + h) - Basis1D::phi(l, xi - h)) / (2 * h);
      CHECK(Basis1D::dphi(l, xi) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("basis orthogonality and diagonal mass matrix") {
  QuadRule g = gauss_rule_ref(8);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        double m = 0.0;
        for (size_t q = 0; q < g.nodes.size(); ++q)
          m += 2.0 * g.weights[q] * Basis1D::phi(i, g.nodes[q]) *
               Basis1D::phi(j, g.nodes[q]);
        if (i == j)
          CHECK(m == doctest::Approx(2.0 * Basis1D::cnorm(i)).epsilon(1e-13));
        else
          CHECK(std::abs(m) <= 1e-13);
      }
  }
}

TEST_CASE("2D basis ordering, count, orthogonality") {
  Basis2D b(2);
  CHECK(b.size() == 6);  // K = k(k+3)/2 = 5
  CHECK(Basis2D(3).size() == 10);
  CHECK(Basis2D::phi(0, 0.3, -0.2) == 1.0);
  CHECK(Basis2D::phi(1, 0.3, -0.2) == doctest::Approx(0.3));
  CHECK(Basis2D::phi(2, 0.3, -0.2) == doctest::Approx(-0.2));
  CHECK(Basis2D::phi(3, 0.3, -0.2) == doctest::Approx(-0.06));
  CHECK(Basis2D::phi(4, 0.3, -0.2) == doctest::Approx(0.09 - 1.0 / 3.0));
  CHECK(Basis2D::phi(5, 0.3, -0.2) == doctest::Approx(0.04 - 1.0 / 3.0));
  QuadRule g = gauss_rule_ref(6);
  int n = Basis2D(3).size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      double m = 0.0;
      for (size_t qx = 0; qx < g.nodes.size(); ++qx)
        for (size_t qy = 0; qy < g.nodes.size(); ++qy)
          m += g.weights[qx] * g.weights[qy] *
               Basis2D::phi(i, g.nodes[qx], g.nodes[qy]) *
               Basis2D::phi(j, g.nodes[qx], g.nodes[qy]);
      CHECK(std::abs(m) <= 1e-13);
    }
}

TEST_CASE("scheme tables: mirrored points and Lobatto weight") {
  for (int k = 1; k <= 3; ++k) {
    SchemeTables1D t = make_tables_1d(k);
    CHECK(t.N == k + 1);
    for (int q = 0; q < t.N; ++q)
      CHECK(t.gx[q] == -t.gx[2 * t.N - 1 - q]);  // exact mirror pairs
    double wsum = 0.0;
    for (int q = 0; q < t.N; ++q) wsum += t.gw[q];
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-15));
  }
  // k = 2 gives L = ceil(5/2) = 3 and the CFL weight 1/6
  CHECK(make_tables_1d(2).L == 3);
  CHECK(make_tables_1d(2).w1hat == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(make_tables_1d(3).w1hat == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("shift expansions reproduce neighbor polynomials") {
  SchemeTables1D t = make_tables_1d(3);
  int nc = t.ncoef;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> c(nc), up(nc), dn(nc);
  for (double& v : c) v = coef(rng);
  for (int m = 0; m < nc; ++m) {
    up[m] = dn[m] = 0.0;
    for (int l = 0; l < nc; ++l) {
      up[m] += t.Tp[m * nc + l] * c[l];
      dn[m] += t.Tm[m * nc + l] * c[l];
    }
  }
  for (double xi : {-0.9, -0.3, 0.4, 1.0}) {
    double d_up = 0.0, v_up = 0.0, d_dn = 0.0, v_dn = 0.0;
    for (int l = 0; l < nc; ++l) {
      d_up += c[l] * Basis1D::phi(l, xi + 2.0);
      v_up += up[l] * Basis1D::phi(l, xi);
      d_dn += c[l] * Basis1D::phi(l, xi - 2.0);
      v_dn += dn[l] * Basis1D::phi(l, xi);
    }
    CHECK(v_up == doctest::Approx(d_up).epsilon(1e-13));
    CHECK(v_dn == doctest::Approx(d_dn).epsilon(1e-13));
  }
}
