#include "cdgrav/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cdgrav {

namespace {

// Legendre P_n and P_n' at x.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) { p = 1.0; dp = 0.0; return; }
  for (int m = 2; m <= n; ++m) {
    double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

// Positive-half nodes and weights of the classical rules on [-1,1],
// weights summing to 2.  Values from standard tables.
const double kGaussNodes[8][4] = {
    {0.0},
    {0.5773502691896257645},
    {0.0, 0.7745966692414833770},
    {0.3399810435848562648, 0.8611363115940525752},
    {0.0, 0.5384693101056830910, 0.9061798459386639928},
    {0.2386191860831969086, 0.6612093864662645137, 0.9324695142031520278},
    {0.0, 0.4058451513773971669, 0.7415311855993944398, 0.9491079123427585245},
    {0.1834346424956498049, 0.5255324099163289858, 0.7966664774136267395,
     0.9602898564975362317}};
const double kGaussWeights[8][4] = {
    {2.0},
    {1.0},
    {0.8888888888888888889, 0.5555555555555555556},
    {0.6521451548625461426, 0.3478548451374538574},
    {0.5688888888888888889, 0.4786286704993664680, 0.2369268850561890875},
    {0.4679139345726910474, 0.3607615730481386076, 0.1713244923791703450},
    {0.4179591836734693878, 0.3818300505051189449, 0.2797053914892766679,
     0.1294849661688696933},
    {0.3626837833783619830, 0.3137066458778872873, 0.2223810344533744705,
     0.1012285362903762592}};

const double kLobNodes[7][4] = {
    {1.0},
    {0.0, 1.0},
    {0.4472135954999579393, 1.0},
    {0.0, 0.6546536707079771438, 1.0},
    {0.2852315164806450963, 0.7650553239294646929, 1.0},
    {0.0, 0.4688487934707142138, 0.8302238962785669298, 1.0},
    {0.2092992179024788687, 0.5917001814331423021, 0.8717401485096066153,
     1.0}};
const double kLobWeights[7][4] = {
    {1.0},
    {1.3333333333333333333, 0.3333333333333333333},
    {0.8333333333333333333, 0.1666666666666666667},
    {0.7111111111111111111, 0.5444444444444444444, 0.1},
    {0.5548583770354863530, 0.3784749562978469803, 0.0666666666666666667},
    {0.4876190476190476190, 0.4317453812098626234, 0.2768260473615659480,
     0.0476190476190476190},
    {0.4124587946587038816, 0.3411226924835043647, 0.2107042271435060393,
     0.0357142857142857143}};

// Half arrays are ordered from the center outwards; lay the full rule out in
// ascending node order.
void fill_symmetric(int n, const double* half_nodes, const double* half_weights,
                    std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    x[half - 1 - i] = -half_nodes[i];
    w[half - 1 - i] = half_weights[i];
    x[n - half + i] = half_nodes[i];
    w[n - half + i] = half_weights[i];
  }
  if (n % 2 == 1) x[half - 1] = 0.0;
}

}  // namespace

QuadRule gauss_rule_ref(int n) {
  if (n < 1) throw std::invalid_argument("gauss_rule: need n >= 1");
  QuadRule r;
  if (n <= 8) {
    fill_symmetric(n, kGaussNodes[n - 1], kGaussWeights[n - 1], r.nodes,
                   r.weights);
  } else {
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p, dp;
      for (int it = 0; it < 100; ++it) {
        legendre(n, x, p, dp);
        double dx = p / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      legendre(n, x, p, dp);
      r.nodes[n - 1 - i] = x;
      r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  for (double& w : r.weights) w *= 0.5;
  return r;
}

QuadRule lobatto_rule_ref(int n) {
  if (n < 2) throw std::invalid_argument("lobatto_rule: need n >= 2");
  QuadRule r;
  if (n <= 8) {
    fill_symmetric(n, kLobNodes[n - 2], kLobWeights[n - 2], r.nodes, r.weights);
  } else {
    // interior nodes are the roots of P'_{n-1}
    r.nodes.resize(n);
    r.weights.resize(n);
    r.nodes[0] = -1.0;
    r.nodes[n - 1] = 1.0;
    for (int i = 1; i < n - 1; ++i) {
      double x = std::cos(M_PI * i / (n - 1.0));
      for (int it = 0; it < 100; ++it) {
        double p, dp;
        legendre(n - 1, x, p, dp);
        // Newton on P'_{n-1}; P'' from the Legendre ODE
        double ddp = (2.0 * x * dp - (n - 1.0) * n * p) / (1.0 - x * x);
        double dx = dp / ddp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.nodes[n - 1 - i] = x;
    }
    for (int i = 0; i < n; ++i) {
      double p, dp;
      legendre(n - 1, r.nodes[i], p, dp);
      r.weights[i] = 2.0 / (n * (n - 1.0) * p * p);
    }
  }
  for (double& w : r.weights) w *= 0.5;
  return r;
}

namespace {
QuadRule map_to(QuadRule r, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("quadrature: need a < b");
  for (double& x : r.nodes) x = 0.5 * (a + b) + 0.5 * (b - a) * x;
  return r;
}
}  // namespace

QuadRule gauss_rule(int n, double a, double b) {
  return map_to(gauss_rule_ref(n), a, b);
}

QuadRule lobatto_rule(int n, double a, double b) {
  return map_to(lobatto_rule_ref(n), a, b);
}

}  // namespace cdgrav
