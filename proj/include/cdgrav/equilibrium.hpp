#ifndef CDGRAV_EQUILIBRIUM_HPP_
#define CDGRAV_EQUILIBRIUM_HPP_

#include <vector>

#include "cdgrav/field.hpp"
#include "cdgrav/gravity.hpp"
#include "cdgrav/tables.hpp"

namespace cdgrav {

// Per-cell samples of the opposite family's projected equilibrium that the
// source quadrature and the CFL parameters keep reusing.
struct EqCache1D {
  double rho_avg_opp = 1.0;  // (1/dx) * int over this cell of rho_h^{s,opp}
  double ps_jump = 0.0;      // p^{s,opp}(center-) - p^{s,opp}(center+)
  double ps_iface[2] = {0.0, 0.0};  // p^{s,opp} at the two cell interfaces
};

struct EqCache2D {
  double rho_avg_opp = 1.0;
  // line integrals of the opposite p^s jump across this cell's center lines
  double jump_x = 0.0, jump_y = 0.0;
};

struct EquilibriumPair1D {
  double gamma = 1.4;
  Field1D C, D;  // components (rho, m, E); m is identically zero
  std::vector<EqCache1D> pc;  // per primal cell
  std::vector<EqCache1D> dc;  // per dual cell (straddlers included)
};

struct EquilibriumPair2D {
  double gamma = 1.4;
  Field2D C, D;
  std::vector<EqCache2D> pc;  // row-major [j*nx + i]
  std::vector<EqCache2D> dc;
  // Per-cell equilibrium samples reused by every residual evaluation:
  // [own 4*nvol][opp 4*nvol][dpsx nvol][dpsy nvol][edge p^s 4*nq] per cell.
  int eval_stride = 0;
  std::vector<double> pc_eval, dc_eval;
};

// Projects (rho^s, 0, p^s/(gamma-1)) with the dual-consistent projection onto
// every cell including ghosts (analytic continuation of the profile).
// Boundary rules may overwrite ghosts afterwards; call compute_eq_caches and
// validate_equilibrium once the fields are final.
EquilibriumPair1D project_equilibrium(const EquilibriumProfile1D& prof,
                                      const Mesh1D& mesh, int k, double gamma,
                                      int ghost);
EquilibriumPair2D project_equilibrium(const EquilibriumProfile2D& prof,
                                      const Mesh2D& mesh, int k, double gamma,
                                      int ghost);

void compute_eq_caches(EquilibriumPair1D& eq, const SchemeTables1D& t);
void compute_eq_caches(EquilibriumPair2D& eq, const SchemeTables2D& t);

// rho^s positive at quadrature points, equilibrium admissible at critical
// points; throws std::runtime_error with the offending cell otherwise.
void validate_equilibrium(const EquilibriumPair1D& eq, const SchemeTables1D& t);
void validate_equilibrium(const EquilibriumPair2D& eq, const SchemeTables2D& t);

}  // namespace cdgrav

#endif
