#ifndef CDGRAV_EULER_HPP_
#define CDGRAV_EULER_HPP_

#include <cmath>
#include <stdexcept>

namespace cdgrav {

struct GasLaw {
  double gamma = 1.4;
  double R = 287.058;  // only problem setups use the gas constant
};

// Conservative state, 1D: (rho, m, E).
struct State1 {
  double rho, m, E;
};

// Conservative state, 2D: (rho, m1, m2, E).
struct State2 {
  double rho, m1, m2, E;
};

inline double pressure(const State1& u, double gamma) {
  return (gamma - 1.0) * (u.E - 0.5 * u.m * u.m / u.rho);
}
inline double pressure(const State2& u, double gamma) {
  return (gamma - 1.0) * (u.E - 0.5 * (u.m1 * u.m1 + u.m2 * u.m2) / u.rho);
}

inline bool admissible(const State1& u, double gamma) {
  return u.rho > 0.0 && pressure(u, gamma) > 0.0;
}
inline bool admissible(const State2& u, double gamma) {
  return u.rho > 0.0 && pressure(u, gamma) > 0.0;
}

inline State1 flux_1d(const State1& u, double gamma) {
  double vel = u.m / u.rho;
  double p = pressure(u, gamma);
  return {u.m, u.m * vel + p, (u.E + p) * vel};
}

inline State2 flux_x_2d(const State2& u, double gamma) {
  double vel = u.m1 / u.rho;
  double p = pressure(u, gamma);
  return {u.m1, u.m1 * vel + p, u.m2 * vel, (u.E + p) * vel};
}
inline State2 flux_y_2d(const State2& u, double gamma) {
  double vel = u.m2 / u.rho;
  double p = pressure(u, gamma);
  return {u.m2, u.m1 * vel, u.m2 * vel + p, (u.E + p) * vel};
}

inline State1 source(const State1& u, double phi_x) {
  return {0.0, -u.rho * phi_x, -u.m * phi_x};
}
inline State2 source(const State2& u, double phi_x, double phi_y) {
  return {0.0, -u.rho * phi_x, -u.rho * phi_y,
          -(u.m1 * phi_x + u.m2 * phi_y)};
}

inline double sound_speed(double rho, double p, double gamma) {
  return std::sqrt(gamma * p / rho);
}

// |u| + c, the splitting speed of Lemma-type flux estimates.
inline double wave_speed_x(const State1& u, double gamma) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw std::domain_error("wave_speed on inadmissible state");
  return std::abs(u.m / u.rho) + sound_speed(u.rho, p, gamma);
}
inline double wave_speed_x(const State2& u, double gamma) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw std::domain_error("wave_speed on inadmissible state");
  return std::abs(u.m1 / u.rho) + sound_speed(u.rho, p, gamma);
}
inline double wave_speed_y(const State2& u, double gamma) {
  double p = pressure(u, gamma);
  if (!(u.rho > 0.0 && p > 0.0))
    throw std::domain_error("wave_speed on inadmissible state");
  return std::abs(u.m2 / u.rho) + sound_speed(u.rho, p, gamma);
}

}  // namespace cdgrav

#endif
