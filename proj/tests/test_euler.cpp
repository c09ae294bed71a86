#include <doctest.h>

#include <cmath>
#include <random>

#include "cdgrav/euler.hpp"
#include "cdgrav/gravity.hpp"

using namespace cdgrav;

TEST_CASE("pressure") {
  CHECK(pressure(State1{1, 0, 2.5}, 1.4) == doctest::Approx(1.0));
  CHECK(pressure(State1{1, 1, 1}, 1.4) == doctest::Approx(0.2));
  CHECK(pressure(State2{1, 0.6, 0.8, 2}, 1.4) == doctest::Approx(0.6));
  // invariant under m -> -m
  CHECK(pressure(State1{2, -3, 9}, 1.4) == pressure(State1{2, 3, 9}, 1.4));
}

TEST_CASE("fluxes") {
  State1 f = flux_1d(State1{1, 0, 2.5}, 1.4);
  CHECK(f.rho == 0.0);
  CHECK(f.m == doctest::Approx(1.0));
  CHECK(f.E == 0.0);
  f = flux_1d(State1{1, 1, 1}, 1.4);
  CHECK(f.rho == doctest::Approx(1.0));
  CHECK(f.m == doctest::Approx(1.2));
  CHECK(f.E == doctest::Approx(1.2));
  State2 g = flux_y_2d(State2{1, 1, 0, 2.5}, 1.4);
  CHECK(g.rho == 0.0);
  CHECK(g.m1 == 0.0);
  CHECK(g.m2 == doctest::Approx(0.8));
  CHECK(g.E == 0.0);
}

TEST_CASE("sources") {
  State1 s = source(State1{1, 2, 5}, 0.0);
  CHECK(s.rho == 0.0);
  CHECK(s.m == 0.0);
  CHECK(s.E == 0.0);
  s = source(State1{1, 2, 5}, 1.0);
  CHECK(s.m == doctest::Approx(-1.0));
  CHECK(s.E == doctest::Approx(-2.0));
  State2 s2 = source(State2{1, 1, 1, 5}, 0.0, 9.8);
  CHECK(s2.m1 == 0.0);
  CHECK(s2.m2 == doctest::Approx(-9.8));
  CHECK(s2.E == doctest::Approx(-9.8));
  // linearity in the gradient and in (rho, m)
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    State1 a{std::abs(u(rng)) + 0.1, u(rng), 5.0};
    double g1 = u(rng), g2 = u(rng);
    State1 sa = source(a, g1 + g2);
    State1 s1 = source(a, g1), s2b = source(a, g2);
    CHECK(sa.m == doctest::Approx(s1.m + s2b.m));
    CHECK(sa.E == doctest::Approx(s1.E + s2b.E));
  }
}

TEST_CASE("admissibility and wave speeds") {
  CHECK(admissible(State1{1, 1, 1}, 1.4));
  CHECK(!admissible(State1{1, 3, 1}, 1.4));  // p = (gamma-1)(1 - 4.5) < 0
  CHECK(!admissible(State1{-1, 0, 1}, 1.4));
  CHECK(wave_speed_x(State1{1, 0, 2.5}, 1.4) ==
        doctest::Approx(std::sqrt(1.4)).epsilon(1e-12));
  CHECK_THROWS_AS(wave_speed_x(State1{1, 3, 1}, 1.4), std::domain_error);
  CHECK(wave_speed_y(State2{1, 0, -2, 4}, 1.4) ==
        doctest::Approx(2.0 + std::sqrt(1.4 * pressure(State2{1, 0, -2, 4}, 1.4))));
}

TEST_CASE("isothermal profile balances any potential") {
  GravityField1D g{[](double x) { return 0.5 * x * x; },
                   [](double x) { return x; }};
  EquilibriumProfile1D prof = isothermal_profile(2.0, 0.5, g);
  CHECK(prof.rho(0.0) == doctest::Approx(2.0));
  CHECK(prof.p(0.0) == doctest::Approx(0.5));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double x = xs(rng);
    CHECK(std::abs(prof.dp(x) + prof.rho(x) * g.phi_x(x)) <= 1e-12);
  }
  CHECK_THROWS_AS(isothermal_profile(-1.0, 1.0, g), std::invalid_argument);
}

TEST_CASE("polytropic profile: sinc limit and balance") {
  PolytropeParams par;
  EquilibriumProfile2D prof = polytropic_profile(par);
  GravityField2D g = polytropic_gravity(par);
  CHECK(prof.rho(0.0, 0.0) == doctest::Approx(1.0));  // rho_c
  CHECK(prof.rho(1e-9, 0.0) == doctest::Approx(1.0));
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> xs(-0.5, 0.5);
  for (int i = 0; i < 1000; ++i) {
    double x = xs(rng), y = xs(rng);
    CHECK(std::abs(prof.dp_dx(x, y) + prof.rho(x, y) * g.phi_x(x, y)) <= 1e-12);
    CHECK(std::abs(prof.dp_dy(x, y) + prof.rho(x, y) * g.phi_y(x, y)) <= 1e-12);
  }
  // analytic derivatives against finite differences
  double h = 1e-7;
  for (double x : {0.1, 0.35}) {
    double fd = (prof.rho(x + h, 0.2) - prof.rho(x - h, 0.2)) / (2 * h);
    CHECK(prof.drho_dx(x, 0.2) == doctest::Approx(fd).epsilon(1e-6));
  }
}
