#ifndef CDGRAV_RESIDUAL2D_HPP_
#define CDGRAV_RESIDUAL2D_HPP_

#include "cdgrav/equilibrium.hpp"
#include "cdgrav/euler.hpp"
#include "cdgrav/field.hpp"
#include "cdgrav/gravity.hpp"
#include "cdgrav/residual1d.hpp"
#include "cdgrav/tables.hpp"

namespace cdgrav {

struct FamilyArgs2D {
  const Field2D* own = nullptr;
  const Field2D* opp = nullptr;
  const EquilibriumPair2D* eq = nullptr;
  bool primal = true;  // selects the equilibrium caches and index offsets
  double gamma = 1.4;
  double inv_tau = 0.0;
  bool well_balanced = true;
  const Fn2D* phi_x = nullptr;
  const Fn2D* phi_y = nullptr;
  const Field2D* phi_opp = nullptr;  // projected potential, non-WB source

  int opp_left() const { return primal ? 0 : -1; }
  const std::vector<EqCache2D>& cache() const {
    return primal ? eq->pc : eq->dc;
  }
  const std::vector<double>& eval_cache() const {
    return primal ? eq->pc_eval : eq->dc_eval;
  }
};

void assemble_rhs_2d(const FamilyArgs2D& fa, const SchemeTables2D& t,
                     Field2D& dudt);

void cell_average_rhs_2d(const FamilyArgs2D& fa, const SchemeTables2D& t,
                         std::vector<State2>& davg);

// Family maxima of the directional CFL parameters.
AlphaParams alpha_params_2d(const FamilyArgs2D& fa, const SchemeTables2D& t);

}  // namespace cdgrav

#endif
