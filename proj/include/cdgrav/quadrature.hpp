#ifndef CDGRAV_QUADRATURE_HPP_
#define CDGRAV_QUADRATURE_HPP_

#include <vector>

namespace cdgrav {

// Nodes live strictly inside (a,b) for Gauss, include a and b for Lobatto.
// Weights are normalized to sum to one, so a physical integral is
// |b-a| * sum_i w_i f(x_i).
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a,b]. Tabulated up to n = 8, Newton
// iteration on the Legendre polynomial beyond that.
QuadRule gauss_rule(int n, double a, double b);

// n-point Gauss-Lobatto rule on [a,b], n >= 2.
QuadRule lobatto_rule(int n, double a, double b);

// Reference rules on [-1,1], weights summing to one.
QuadRule gauss_rule_ref(int n);
QuadRule lobatto_rule_ref(int n);

}  // namespace cdgrav

#endif
