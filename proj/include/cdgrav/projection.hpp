#ifndef CDGRAV_PROJECTION_HPP_
#define CDGRAV_PROJECTION_HPP_

#include <functional>

#include "cdgrav/field.hpp"
#include "cdgrav/gravity.hpp"

namespace cdgrav {

// Single-cell projections; coef has k+1 (resp. (k+1)(k+2)/2) entries.
// n_gauss is the Gauss point count per half cell (0 picks k+3, one order
// above the minimum so quadrature error stays below projection error).
void project_l2_cell(const Fn1D& f, double xc, double dx, int k, double* coef,
                     int n_gauss = 0);
void project_novel_cell(const Fn1D& f, double xc, double dx, int k,
                        double* coef, int n_gauss = 0);
void project_l2_cell(const Fn2D& f, double xc, double yc, double dx, double dy,
                     int k, double* coef, int n_gauss = 0);
void project_novel_cell(const Fn2D& f, double xc, double yc, double dx,
                        double dy, int k, double* coef, int n_gauss = 0);

// Whole-field projections over cells [j0, j1) including ghosts if requested.
void project_field(const Fn1D& f, Field1D& out, int comp, int j0, int j1,
                   bool novel, int n_gauss = 0);
void project_field(const Fn2D& f, Field2D& out, int comp, int i0, int i1,
                   int j0, int j1, bool novel, int n_gauss = 0);

// All components in one quadrature sweep; f fills n_comp values per point and
// coef holds n_comp blocks of k+1 (resp. K+1) coefficients.
using FnMulti1D = std::function<void(double, double*)>;
using FnMulti2D = std::function<void(double, double, double*)>;
void project_cell_multi(const FnMulti1D& f, int n_comp, double xc, double dx,
                        int k, double* coef, bool novel, int n_gauss = 0);
void project_cell_multi(const FnMulti2D& f, int n_comp, double xc, double yc,
                        double dx, double dy, int k, double* coef, bool novel,
                        int n_gauss = 0);

}  // namespace cdgrav

#endif
