#ifndef CDGRAV_BASIS_HPP_
#define CDGRAV_BASIS_HPP_

#include <array>
#include <stdexcept>

namespace cdgrav {

// Scaled Legendre basis on [-1,1]:
//   Phi_0 = 1, Phi_1 = xi, Phi_2 = xi^2 - 1/3, Phi_3 = xi^3 - (3/5) xi.
// Orthogonal (not orthonormal).  Degrees up to 3 are supported, which covers
// the third- and fourth-order schemes.
struct Basis1D {
  static constexpr int kMaxDegree = 3;
  int k = 2;

  explicit Basis1D(int degree = 2) : k(degree) {
    if (k < 0 || k > kMaxDegree) throw std::invalid_argument("Basis1D: degree");
  }
  int size() const { return k + 1; }

  static double phi(int l, double xi) {
    switch (l) {
      case 0: return 1.0;
      case 1: return xi;
      case 2: return xi * xi - 1.0 / 3.0;
      default: return xi * xi * xi - 0.6 * xi;
    }
  }
  static double dphi(int l, double xi) {
    switch (l) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return 2.0 * xi;
      default: return 3.0 * xi * xi - 0.6;
    }
  }
  static double d2phi(int l, double xi) {
    switch (l) {
      case 0:
      case 1: return 0.0;
      case 2: return 2.0;
      default: return 6.0 * xi;
    }
  }
  // Parity under xi -> -xi: +1 even, -1 odd.
  static double parity(int l) { return (l % 2 == 0) ? 1.0 : -1.0; }
  // (1/2) * int_{-1}^{1} Phi_l^2 dxi, so that int_cell Phi_l^2 dx = dx * cnorm.
  static double cnorm(int l) {
    constexpr double c[4] = {1.0, 1.0 / 3.0, 4.0 / 45.0, 4.0 / 175.0};
    return c[l];
  }

  void eval(double xi, double* val) const {
    for (int l = 0; l <= k; ++l) val[l] = phi(l, xi);
  }
  void eval_deriv(double xi, double* dval) const {
    for (int l = 0; l <= k; ++l) dval[l] = dphi(l, xi);
  }
};

// Tensor-product basis on [-1,1]^2 in the ordering
//   1, xi, eta, xi*eta, xi^2 - 1/3, eta^2 - 1/3, ...
// so that the moments adjusted by the quadrant-mean projection are exactly
// the indices 1, 2, 3.  Each function is Phi_a(xi) * Phi_b(eta) with the 1D
// factors above; count is K+1 with K = k(k+3)/2.
struct Basis2D {
  static constexpr int kMaxDegree = 3;
  int k = 2;

  explicit Basis2D(int degree = 2) : k(degree) {
    if (k < 0 || k > kMaxDegree) throw std::invalid_argument("Basis2D: degree");
  }
  int size() const { return (k + 1) * (k + 2) / 2; }

  // (a,b) exponents of the l-th function for k <= 3.
  static std::array<int, 2> pair(int l) {
    constexpr int a[10] = {0, 1, 0, 1, 2, 0, 3, 2, 1, 0};
    constexpr int b[10] = {0, 0, 1, 1, 0, 2, 0, 1, 2, 3};
    return {a[l], b[l]};
  }
  static double phi(int l, double xi, double eta) {
    auto [a, b] = pair(l);
    return Basis1D::phi(a, xi) * Basis1D::phi(b, eta);
  }
  static double dphi_dxi(int l, double xi, double eta) {
    auto [a, b] = pair(l);
    return Basis1D::dphi(a, xi) * Basis1D::phi(b, eta);
  }
  static double dphi_deta(int l, double xi, double eta) {
    auto [a, b] = pair(l);
    return Basis1D::phi(a, xi) * Basis1D::dphi(b, eta);
  }
  static double parity_x(int l) { return Basis1D::parity(pair(l)[0]); }
  static double parity_y(int l) { return Basis1D::parity(pair(l)[1]); }
  // (1/4) * int_{[-1,1]^2} Phi_l^2, so that int_cell Phi_l^2 = dx*dy * cnorm.
  static double cnorm(int l) {
    auto [a, b] = pair(l);
    return Basis1D::cnorm(a) * Basis1D::cnorm(b);
  }
};

}  // namespace cdgrav

#endif
