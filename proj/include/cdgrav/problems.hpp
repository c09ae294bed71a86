#ifndef CDGRAV_PROBLEMS_HPP_
#define CDGRAV_PROBLEMS_HPP_

#include <map>
#include <string>
#include <vector>

#include "cdgrav/boundary.hpp"
#include "cdgrav/euler.hpp"
#include "cdgrav/gravity.hpp"

namespace cdgrav {

struct ProblemSpec {
  std::string id;
  std::string description;
  int dim = 1;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  GasLaw gas;

  GravityField1D grav1;
  GravityField2D grav2;
  EquilibriumProfile1D eq1;
  EquilibriumProfile2D eq2;

  std::function<State1(double)> init1;
  std::function<State2(double, double)> init2;
  Exact1D exact1;  // empty when no closed-form solution exists
  Exact2D exact2;
  bool has_exact = false;
  bool wb_claim = false;  // solution should stay at the projected equilibrium

  BoundarySpec1D bc1;
  BoundarySpec2D bc2;

  int default_k = 2;
  int default_nx = 64, default_ny = 64;
  double default_t_final = 0.1;
  bool default_weno = false;
  std::vector<double> tvb_m;  // per conservative component
  double eta = 0.0;           // perturbation amplitude actually applied
};

// Free parameters a caller may override before the spec is built.
struct ProblemParams {
  double eta = std::numeric_limits<double>::quiet_NaN();  // NaN keeps default
};

ProblemSpec make_problem(const std::string& id,
                         const ProblemParams& par = {});
std::vector<std::pair<std::string, std::string>> list_problems();

// Rising-bubble diagnostics: Exner pressure and potential temperature of a
// local (rho, p) state under the problem's reference values.
double exner_pressure(const ProblemSpec& spec, double p);
double potential_temperature(const ProblemSpec& spec, double rho, double p);

}  // namespace cdgrav

#endif
