#ifndef CDGRAV_BOUNDARY_HPP_
#define CDGRAV_BOUNDARY_HPP_

#include <functional>

#include "cdgrav/euler.hpp"
#include "cdgrav/field.hpp"

namespace cdgrav {

enum class BcKind {
  periodic,
  outflow,
  reflective,
  dirichlet_exact,        // ghosts projected from the exact solution at t
  dirichlet_equilibrium,  // ghosts copied from the projected equilibrium
};

using Exact1D = std::function<State1(double, double)>;          // (x, t)
using Exact2D = std::function<State2(double, double, double)>;  // (x, y, t)

struct BoundarySpec1D {
  BcKind left = BcKind::periodic, right = BcKind::periodic;
  Exact1D exact;
};

struct BoundarySpec2D {
  BcKind left = BcKind::periodic, right = BcKind::periodic;
  BcKind bottom = BcKind::periodic, top = BcKind::periodic;
  Exact2D exact;
};

// Fills the ghost layers of one field and enforces the straddling-cell
// constraints of the dual family (reflective cells centered on a wall are
// symmetrized, Dirichlet straddlers are re-projected, periodic straddlers are
// re-aliased).  eq_same is the same-family projected equilibrium, consumed by
// dirichlet_equilibrium.  When for_equilibrium is set, Dirichlet sides leave
// the analytic-continuation ghosts in place.
void apply_boundary(Field1D& u, const Field1D* eq_same,
                    const BoundarySpec1D& bc, double time,
                    bool for_equilibrium = false, int n_gauss = 0,
                    bool skip_dirichlet = false);
void apply_boundary(Field2D& u, const Field2D* eq_same,
                    const BoundarySpec2D& bc, double time,
                    bool for_equilibrium = false, int n_gauss = 0,
                    bool skip_dirichlet = false);

}  // namespace cdgrav

#endif
