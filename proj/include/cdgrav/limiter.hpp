#ifndef CDGRAV_LIMITER_HPP_
#define CDGRAV_LIMITER_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdgrav/euler.hpp"
#include "cdgrav/field.hpp"
#include "cdgrav/tables.hpp"

namespace cdgrav {

// Raised when a cell average leaves the admissible set: the CFL bound or the
// assembly is wrong, never something to patch silently.
struct PositivityFault : std::runtime_error {
  explicit PositivityFault(const std::string& what) : std::runtime_error(what) {}
};

struct LimiterReport {
  long density_limited = 0;
  long pressure_limited = 0;
  long weno_troubled = 0;
  double min_theta1 = 1.0;
  double min_theta2 = 1.0;
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
  void merge(const LimiterReport& o);
};

struct TvbParams {
  std::vector<double> m;  // per conservative component, empty means all zero
  double value(int comp) const {
    return comp < static_cast<int>(m.size()) ? m[comp] : 0.0;
  }
};

// TVB corrected minmod: first argument when |a1| <= M dx^2, classical minmod
// otherwise.
double tvb_minmod(const double* a, int n, double m_const, double dx);

// Two-stage conservative scaling toward the cell average, enforcing
// admissibility at the critical points of every evolved cell.
void pp_limit(Field1D& u, const SchemeTables1D& t, double gamma,
              LimiterReport* rep);
void pp_limit(Field2D& u, const SchemeTables2D& t, double gamma,
              LimiterReport* rep);

// Troubled-cell detection on the perturbation from the projected equilibrium
// (same mesh family); ghost data must be filled.
void detect_troubled(const Field1D& u, const Field1D& eq, const TvbParams& tvb,
                     std::vector<std::uint8_t>& mask);
void detect_troubled(const Field2D& u, const Field2D& eq, const TvbParams& tvb,
                     std::vector<std::uint8_t>& mask);

// Characteristic-wise compact WENO rebuild of flagged cells from the
// neighboring perturbation polynomials; cell averages are kept bit-exact and
// unflagged cells are untouched.
void weno_limit(Field1D& u, const Field1D& eq, const SchemeTables1D& t,
                double gamma, const std::vector<std::uint8_t>& mask);
void weno_limit(Field2D& u, const Field2D& eq, const SchemeTables2D& t,
                double gamma, const std::vector<std::uint8_t>& mask);

// Right/left eigenvector matrices (row-major) of the flux Jacobians at a
// given state; used by the characteristic-wise limiter and its tests.
void euler_eig_1d(const State1& u, double gamma, double* left, double* right);
void euler_eig_x_2d(const State2& u, double gamma, double* left, double* right);
void euler_eig_y_2d(const State2& u, double gamma, double* left, double* right);

}  // namespace cdgrav

#endif
