#include "cdgrav/gravity.hpp"

namespace cdgrav {

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    double z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
  }
  return std::sin(z) / z;
}

double dsinc_over_z(double z) {
  if (std::abs(z) < 1e-4) {
    double z2 = z * z;
    return -1.0 / 3.0 + z2 / 30.0 * (1.0 - z2 / 28.0);
  }
  return (z * std::cos(z) - std::sin(z)) / (z * z * z);
}

EquilibriumProfile1D isothermal_profile(double rho0, double p0,
                                        const GravityField1D& g) {
  check_positive(rho0, "reference density");
  check_positive(p0, "reference pressure");
  double s = rho0 / p0;
  EquilibriumProfile1D prof;
  prof.kind = EquilibriumKind::isothermal;
  auto phi = g.phi;
  auto phi_x = g.phi_x;
  prof.rho = [=](double x) { return rho0 * std::exp(-s * phi(x)); };
  prof.p = [=](double x) { return p0 * std::exp(-s * phi(x)); };
  prof.drho = [=](double x) {
    return -s * phi_x(x) * rho0 * std::exp(-s * phi(x));
  };
  prof.dp = [=](double x) { return -s * phi_x(x) * p0 * std::exp(-s * phi(x)); };
  return prof;
}

EquilibriumProfile2D isothermal_profile(double rho0, double p0,
                                        const GravityField2D& g) {
  check_positive(rho0, "reference density");
  check_positive(p0, "reference pressure");
  double s = rho0 / p0;
  EquilibriumProfile2D prof;
  prof.kind = EquilibriumKind::isothermal;
  auto phi = g.phi;
  auto phi_x = g.phi_x;
  auto phi_y = g.phi_y;
  auto e = [=](double x, double y) { return std::exp(-s * phi(x, y)); };
  prof.rho = [=](double x, double y) { return rho0 * e(x, y); };
  prof.p = [=](double x, double y) { return p0 * e(x, y); };
  prof.drho_dx = [=](double x, double y) { return -s * phi_x(x, y) * rho0 * e(x, y); };
  prof.drho_dy = [=](double x, double y) { return -s * phi_y(x, y) * rho0 * e(x, y); };
  prof.dp_dx = [=](double x, double y) { return -s * phi_x(x, y) * p0 * e(x, y); };
  prof.dp_dy = [=](double x, double y) { return -s * phi_y(x, y) * p0 * e(x, y); };
  return prof;
}

EquilibriumProfile1D constant_density_profile(double rho0, double p0,
                                              const GravityField1D& g) {
  check_positive(rho0, "reference density");
  check_positive(p0, "reference pressure");
  EquilibriumProfile1D prof;
  prof.kind = EquilibriumKind::custom_piecewise;
  auto phi = g.phi;
  auto phi_x = g.phi_x;
  prof.rho = [rho0](double) { return rho0; };
  prof.drho = [](double) { return 0.0; };
  prof.p = [=](double x) { return p0 - rho0 * phi(x); };
  prof.dp = [=](double x) { return -rho0 * phi_x(x); };
  return prof;
}

EquilibriumProfile2D constant_density_profile(double rho0, double p0,
                                              const GravityField2D& g) {
  check_positive(rho0, "reference density");
  check_positive(p0, "reference pressure");
  EquilibriumProfile2D prof;
  prof.kind = EquilibriumKind::custom_piecewise;
  auto phi = g.phi;
  auto phi_x = g.phi_x;
  auto phi_y = g.phi_y;
  prof.rho = [rho0](double, double) { return rho0; };
  prof.drho_dx = [](double, double) { return 0.0; };
  prof.drho_dy = [](double, double) { return 0.0; };
  prof.p = [=](double x, double y) { return p0 - rho0 * phi(x, y); };
  prof.dp_dx = [=](double x, double y) { return -rho0 * phi_x(x, y); };
  prof.dp_dy = [=](double x, double y) { return -rho0 * phi_y(x, y); };
  return prof;
}

EquilibriumProfile2D polytropic_profile(const PolytropeParams& par) {
  check_positive(par.K, "K");
  check_positive(par.g, "g");
  check_positive(par.rho_c, "rho_c");
  double alpha = std::sqrt(2.0 * M_PI * par.g / par.K);
  double K = par.K, rho_c = par.rho_c;
  EquilibriumProfile2D prof;
  prof.kind = EquilibriumKind::polytropic;
  auto rho = [=](double x, double y) {
    double r = std::sqrt(x * x + y * y);
    return rho_c * sinc(alpha * r);
  };
  // drho/dx = rho_c * alpha^2 * x * dsinc_over_z(alpha r)
  auto drx = [=](double x, double y) {
    double r = std::sqrt(x * x + y * y);
    return rho_c * alpha * alpha * x * dsinc_over_z(alpha * r);
  };
  auto dry = [=](double x, double y) {
    double r = std::sqrt(x * x + y * y);
    return rho_c * alpha * alpha * y * dsinc_over_z(alpha * r);
  };
  prof.rho = rho;
  prof.drho_dx = drx;
  prof.drho_dy = dry;
  prof.p = [=](double x, double y) {
    double d = rho(x, y);
    return K * d * d;
  };
  prof.dp_dx = [=](double x, double y) { return 2.0 * K * rho(x, y) * drx(x, y); };
  prof.dp_dy = [=](double x, double y) { return 2.0 * K * rho(x, y) * dry(x, y); };
  return prof;
}

GravityField2D polytropic_gravity(const PolytropeParams& par) {
  auto prof = polytropic_profile(par);
  double K = par.K;
  GravityField2D g;
  g.phi = [=](double x, double y) { return -2.0 * K * prof.rho(x, y); };
  g.phi_x = [=](double x, double y) { return -2.0 * K * prof.drho_dx(x, y); };
  g.phi_y = [=](double x, double y) { return -2.0 * K * prof.drho_dy(x, y); };
  return g;
}

}  // namespace cdgrav
