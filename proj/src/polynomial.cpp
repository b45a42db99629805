#include "scmap/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace scmap {

void multiply_linear(std::vector<Complex>& p, Complex root) {
  p.push_back(Complex{0.0, 0.0});
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    p[i] = p[i - 1] - root * p[i];
  }
  p[0] *= -root;
}

void multiply_affine(std::vector<Complex>& p, Complex c) {
  p.push_back(Complex{0.0, 0.0});
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    p[i] = p[i] + c * p[i - 1];
  }
}

PolyEval horner(const std::vector<Complex>& p, Complex z) {
  Complex v{0.0, 0.0};
  Complex d{0.0, 0.0};
  for (std::size_t i = p.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + p[i];
  }
  return PolyEval{v, d};
}

double max_coefficient_magnitude(const std::vector<Complex>& p) {
  double m = 0.0;
  for (const Complex& c : p) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-p[0] / p[1]};

  // Starting points on the unit circle; the 1e-3 index-dependent phase breaks
  // symmetric configurations that would otherwise stall the iteration.
  std::vector<Complex> roots(deg);
  for (int j = 0; j < deg; ++j) {
    const double angle = 6.283185307179586 * j / deg + 1e-3 * (j + 1);
    roots[j] = Complex{std::cos(angle), std::sin(angle)};
  }

  const int max_iterations = 200;
  for (int iter = 0; iter < max_iterations; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < deg; ++j) {
      const PolyEval pe = horner(p, roots[j]);
      if (std::abs(pe.value) == 0.0) continue;
      if (std::abs(pe.derivative) == 0.0) {
        // Sitting exactly on a critical point; nudge off it.
        roots[j] *= Complex{1.0, 1e-8};
        continue;
      }
      const Complex w = pe.value / pe.derivative;
      Complex repulsion{0.0, 0.0};
      for (int k = 0; k < deg; ++k) {
        if (k != j) repulsion += 1.0 / (roots[j] - roots[k]);
      }
      const Complex step = w / (1.0 - w * repulsion);
      roots[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-14) break;
  }

  // Newton polish, at most 5 steps per root.
  for (int j = 0; j < deg; ++j) {
    for (int it = 0; it < 5; ++it) {
      const PolyEval pe = horner(p, roots[j]);
      if (std::abs(pe.derivative) == 0.0) break;
      const Complex step = pe.value / pe.derivative;
      roots[j] -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(roots[j]))) break;
    }
  }
  return roots;
}

}  // namespace scmap
