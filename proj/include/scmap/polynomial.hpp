#pragma once

#include <complex>
#include <vector>

namespace scmap {

using Complex = std::complex<double>;

// Coefficients are stored in ascending power order: p[0] + p[1] z + ...

// Multiplies p by the linear factor (z - root).
void multiply_linear(std::vector<Complex>& p, Complex root);

// Multiplies p by (1 + c z).
void multiply_affine(std::vector<Complex>& p, Complex c);

// Value and derivative at z by a single Horner pass.
struct PolyEval {
  Complex value;
  Complex derivative;
};
PolyEval horner(const std::vector<Complex>& p, Complex z);

double max_coefficient_magnitude(const std::vector<Complex>& p);

// All roots by Aberth-Ehrlich simultaneous iteration started from points on
// the unit circle with index-dependent phase perturbations, followed by a few
// Newton polish steps per root. Requires a nonzero leading coefficient.
std::vector<Complex> aberth_roots(const std::vector<Complex>& p);

}  // namespace scmap
