#ifndef CDGRAV_RESIDUAL1D_HPP_
#define CDGRAV_RESIDUAL1D_HPP_

#include "cdgrav/equilibrium.hpp"
#include "cdgrav/euler.hpp"
#include "cdgrav/field.hpp"
#include "cdgrav/gravity.hpp"
#include "cdgrav/tables.hpp"

namespace cdgrav {

struct AlphaParams {
  double alpha_x = 0.0;
  double alpha_y = 0.0;  // 2D only
};

// Inputs of one family's assembly.  opp_left is the opposite-cell index
// covering this family's left half cell (0 for primal, -1 for dual).
struct FamilyArgs1D {
  const Field1D* own = nullptr;
  const Field1D* opp = nullptr;
  const Field1D* eq_own = nullptr;
  const Field1D* eq_opp = nullptr;
  const std::vector<EqCache1D>* cache = nullptr;
  int opp_left = 0;
  double gamma = 1.4;
  double inv_tau = 0.0;
  bool well_balanced = true;
  const Fn1D* phi_x = nullptr;       // analytic gradient (CFL scan)
  const Field1D* phi_opp = nullptr;  // projected potential, non-WB source
};

// d/dt of every modal coefficient of this family (evolved cells only).
void assemble_rhs_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                     Field1D& dudt);

// Cell-average time derivatives from the direct average formula, as an
// independent cross-check of coefficient zero of assemble_rhs_1d.
void cell_average_rhs_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                         std::vector<State1>& davg);

// Largest CFL parameter of this family (interface wave speeds plus the
// source-strength term built from the projected equilibrium).
double alpha_params_1d(const FamilyArgs1D& fa, const SchemeTables1D& t);

// Per-cell moment vectors (components x coefficients, row-major), the test
// surface for the individual pieces of the discretization.
void wb_dissipation_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                               int cell, double* moments);
void flux_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t, int cell,
                     double* moments);
void wb_source_moments_1d(const FamilyArgs1D& fa, const SchemeTables1D& t,
                          int cell, double* moments);

}  // namespace cdgrav

#endif
