#include "scmap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scmap {

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix, updating
// only the first row of the accumulated eigenvector matrix. diag and first
// are modified in place; offdiag is workspace. Classic tql2 reduced to what
// the Golub-Welsch construction needs.
void tridiag_eigen_first_row(std::vector<double>& diag,
                             std::vector<double>& offdiag,
                             std::vector<double>& first) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return;
  offdiag.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(offdiag[m]) <= 1e-15 * scale) break;
      }
      if (m != l) {
        if (++iterations == 50) {
          throw std::runtime_error("tridiag_eigen: QL failed to converge");
        }
        double g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + offdiag[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * offdiag[i];
          const double b = c * offdiag[i];
          r = std::hypot(f, g);
          offdiag[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            offdiag[m] = 0.0;
            underflow = i >= l;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          // Rotation applied to the tracked first row of the eigenvectors.
          f = first[i + 1];
          first[i + 1] = s * first[i] + c * f;
          first[i] = c * first[i] - s * f;
        }
        if (underflow) continue;
        diag[l] -= p;
        offdiag[l] = g;
        offdiag[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0) {
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  }

  const double ab = alpha + beta;
  std::vector<double> diag(n);
  std::vector<double> offdiag(n > 1 ? n - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[k] = (beta * beta - alpha * alpha) / den;
  }
  for (int k = 1; k < n; ++k) {
    double b2;
    if (k == 1) {
      // The (k + ab) and (2k + ab - 1) factors cancel at k = 1.
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
           ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
            (2.0 * k + ab - 1.0));
    }
    offdiag[k - 1] = std::sqrt(b2);
  }

  std::vector<double> first(n, 0.0);
  first[0] = 1.0;
  tridiag_eigen_first_row(diag, offdiag, first);

  const double mu0 = std::pow(2.0, ab + 1.0) *
                     std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));

  QuadratureRule rule;
  rule.nodes = diag;
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * first[i] * first[i];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&rule](int a, int b) { return rule.nodes[a] < rule.nodes[b]; });
  QuadratureRule sorted;
  sorted.nodes.reserve(n);
  sorted.weights.reserve(n);
  for (int i : order) {
    sorted.nodes.push_back(rule.nodes[i]);
    sorted.weights.push_back(rule.weights[i]);
  }
  return sorted;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

namespace {

std::complex<double> panel_gl16(const std::function<std::complex<double>(double)>& f,
                                double a, double b, const QuadratureRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

std::complex<double> integrate_rec(const std::function<std::complex<double>(double)>& f,
                                   double a, double b, double tol,
                                   const QuadratureRule& rule,
                                   std::complex<double> whole, int depth) {
  const double mid = 0.5 * (a + b);
  const std::complex<double> left = panel_gl16(f, a, mid, rule);
  const std::complex<double> right = panel_gl16(f, mid, b, rule);
  if (depth >= 24 || std::abs(left + right - whole) <= tol) return left + right;
  return integrate_rec(f, a, mid, 0.5 * tol, rule, left, depth + 1) +
         integrate_rec(f, mid, b, 0.5 * tol, rule, right, depth + 1);
}

}  // namespace

std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol) {
  static const QuadratureRule rule = gauss_legendre(16);
  return integrate_rec(f, a, b, tol, rule, panel_gl16(f, a, b, rule), 0);
}

}  // namespace scmap
