#ifndef CDGRAV_GRAVITY_HPP_
#define CDGRAV_GRAVITY_HPP_

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace cdgrav {

using Fn1D = std::function<double(double)>;
using Fn2D = std::function<double(double, double)>;

// Static potential; closed-form evaluators.  Only setup code calls these,
// the scheme itself works with the projected equilibrium polynomials.
struct GravityField1D {
  std::function<double(double)> phi;
  std::function<double(double)> phi_x;
};

struct GravityField2D {
  std::function<double(double, double)> phi;
  std::function<double(double, double)> phi_x;
  std::function<double(double, double)> phi_y;
};

enum class EquilibriumKind { isothermal, polytropic, custom_piecewise };

// Zero-velocity profile with p_x = -rho phi_x.  Analytic derivatives are kept
// for balance-residual checks and error reporting.
struct EquilibriumProfile1D {
  EquilibriumKind kind = EquilibriumKind::isothermal;
  std::function<double(double)> rho, p, drho, dp;
};

struct EquilibriumProfile2D {
  EquilibriumKind kind = EquilibriumKind::isothermal;
  std::function<double(double, double)> rho, p;
  std::function<double(double, double)> drho_dx, drho_dy, dp_dx, dp_dy;
};

// rho = rho0 exp(-s phi), p = p0 exp(-s phi) with s = rho0/p0, which balances
// any static potential.
EquilibriumProfile1D isothermal_profile(double rho0, double p0,
                                        const GravityField1D& g);
EquilibriumProfile2D isothermal_profile(double rho0, double p0,
                                        const GravityField2D& g);

// Constant density with p = p0 - rho0 * phi; p0 must keep the pressure
// positive on the domain.
EquilibriumProfile1D constant_density_profile(double rho0, double p0,
                                              const GravityField1D& g);
EquilibriumProfile2D constant_density_profile(double rho0, double p0,
                                              const GravityField2D& g);

// Radial polytrope rho = rho_c sin(alpha r)/(alpha r), p = K rho^2 with
// alpha = sqrt(2 pi g / K); the matching potential is phi = -2 K rho.
struct PolytropeParams {
  double K = 1.0, g = 1.0, rho_c = 1.0;
};
EquilibriumProfile2D polytropic_profile(const PolytropeParams& par);
GravityField2D polytropic_gravity(const PolytropeParams& par);

// sin(z)/z and (z cos z - sin z)/z^3 with series fallback near zero.
double sinc(double z);
double dsinc_over_z(double z);

inline void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace cdgrav

#endif
