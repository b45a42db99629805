#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace scmap {

// Nodes and weights of an n-point rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta, alpha, beta > -1,
// built by the Golub-Welsch eigenvalue method. Exact for polynomial
// integrands of degree <= 2n-1 against the weight.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

// Gauss-Legendre (alpha = beta = 0).
QuadratureRule gauss_legendre(int n);

// Adaptive Gauss-Legendre integration of a smooth complex integrand over
// [a, b]: bisects until the 16-point estimate of each panel is within tol of
// the sum of its halves.
std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol);

}  // namespace scmap
