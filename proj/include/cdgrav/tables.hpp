#ifndef CDGRAV_TABLES_HPP_
#define CDGRAV_TABLES_HPP_

#include <cstdint>
#include <vector>

#include "cdgrav/basis.hpp"
#include "cdgrav/quadrature.hpp"

namespace cdgrav {

// Precomputed reference-cell data shared by projection, residual assembly,
// limiting and the CFL bound.  Gauss points are stored left half then right
// half, ascending; the left half is the exact negation of the right half so
// that point q and point 2N-1-q form a mirror pair bit for bit.
struct SchemeTables1D {
  int k = 2, N = 3, L = 3, ncoef = 3;

  std::vector<double> gx;    // [2N] cell-reference Gauss points
  std::vector<double> gw;    // [2N] per-point weights, each half sums to 1
  std::vector<double> B;     // [2N][ncoef] own basis values
  std::vector<double> Bx;    // [2N][ncoef] d/dxi
  std::vector<double> Bopp;  // [2N][ncoef] opposite-cell basis at my points
  std::vector<double> Boppx; // [2N][ncoef] its d/dxi (opposite reference)

  // Rows at special locations.
  std::vector<double> Bctr;         // Phi(0): opposite cell at my interfaces
  std::vector<double> Bleft, Bright;  // own Phi(-1), Phi(+1)

  double w1hat = 1.0 / 6.0;  // first Lobatto weight, halves normalized to 1
  std::vector<double> lob_x;  // [2L] Lobatto points, same mirrored layout

  // Critical point set S (Gauss plus Lobatto on both halves, deduplicated).
  std::vector<double> sx;    // [nS]
  std::vector<double> BS;    // [nS][ncoef]

  // Phi_l(xi+2) and Phi_l(xi-2) expanded in Phi_m(xi); row m, column l.
  std::vector<double> Tp, Tm;  // [ncoef][ncoef]

  int n_s() const { return static_cast<int>(sx.size()); }
};

struct SchemeTables2D {
  int k = 2, N = 3, L = 3, ncoef = 6;
  SchemeTables1D t1;

  // Volume points (2N)^2, index qx*2N + qy.
  std::vector<double> wvol;        // [nvol] product weights (sums to 4)
  std::vector<double> V, Vx, Vy;   // [nvol][ncoef]
  std::vector<double> Vopp, VoppX, VoppY;  // [nvol][ncoef]

  // Edge rows: side 0 = low, 1 = high coordinate; second index runs over the
  // 2N Gauss points along the edge.
  std::vector<double> ExOwn, ExOpp;  // [2][2N][ncoef] at x = -1 / +1
  std::vector<double> EyOwn, EyOpp;  // [2][2N][ncoef] at y = -1 / +1

  // Critical points S_ij (union of Gauss x Lobatto tensor sets per quadrant).
  std::vector<double> sxy;           // [nS][2]
  std::vector<double> BS;            // [nS][ncoef]
  std::vector<std::uint8_t> s_in_q;  // 1 where both coordinates are Gauss

  // Opposite-cell rows at the per-quadrant critical points (kept one-sided,
  // so shared points carry both traces); quadrant = sx*2 + sy selects the
  // overlapping opposite cell (i + sx, j + sy) relative to the left overlap.
  std::vector<double> so_rows;          // [nSo][ncoef]
  std::vector<std::uint8_t> so_quad;    // [nSo]

  int nvol() const { return 4 * N * N; }
  int n_s() const { return static_cast<int>(s_in_q.size()); }
};

SchemeTables1D make_tables_1d(int k, int n_gauss = 0);
SchemeTables2D make_tables_2d(int k, int n_gauss = 0);

}  // namespace cdgrav

#endif
