#pragma once

#include <vector>

#include "scmap/blaschke.hpp"

namespace scmap {

enum class MapKind { Interior, Exterior };

// Power of z on the left side of the pre-vertex equation z^m B1 = B2.
inline int circle_multiplicity(MapKind kind) {
  return kind == MapKind::Interior ? 1 : 2;
}

// An interior or exterior polygon mapping defined by a Blaschke pair.
struct MapSpec {
  MapKind kind = MapKind::Interior;
  BlaschkeProduct b1;
  BlaschkeProduct b2;

  int d1() const { return b1.degree(); }
  int d2() const { return b2.degree(); }
  // Expected pre-vertex count: d1 + d2 + 1 (interior) or d1 + d2 + 2.
  int prevertex_count() const { return d1() + d2() + circle_multiplicity(kind); }
};

// Throws PreconditionError when b1 and b2 share a zero.
void validate_spec(const MapSpec& spec);

enum class VertexLabel { Convex, Concave };

struct Prevertex {
  double t = 0.0;                          // argument in [0, 2pi)
  Complex z;                               // e^{it}
  double beta = 0.0;                       // exterior angle / (2 pi)
  double phi_prime = 0.0;                  // boundary angular speed at t
  VertexLabel label = VertexLabel::Convex; // sign of phi_prime
};

// Pre-vertices sorted by t, with angles and labels filled in.
struct PrevertexSet {
  MapSpec spec;
  std::vector<Prevertex> points;
  // True when built from raw (t, beta) data with no backing Blaschke pair.
  bool formal = false;

  std::vector<double> arguments() const;
  std::vector<double> betas() const;
};

// Coefficients (ascending) of
//   P(z) = z^m c1 prod(z - a_k) prod(1 - conj(b_j) z)
//        -      c2 prod(z - b_j) prod(1 - conj(a_k) z),
// whose roots are exactly the solutions of z^m B1 = B2. Throws
// DegreeCollapseError when the leading coefficient is below 1e-12 in modulus
// (B2 with a zero at the origin; such pairs never come from polygon maps).
std::vector<Complex> to_polynomial(const MapSpec& spec);

// Solves the pre-vertex equation, verifies that every root is unimodular
// within tol and simple (pairwise separation > 10*tol), polishes the
// arguments on the circle, and fills angles and labels. Throws
// InadmissibleError when the pair does not produce simple unimodular roots.
PrevertexSet solve_prevertices(const MapSpec& spec, double tol = 1e-8);

// Independent boundary-sampling oracle: locates all t with w(e^{it}) = 1,
// w = z^m B1/B2, by dense sampling of the principal argument followed by
// bisection to 1e-10. Throws OracleMissError when consecutive crossings are
// closer than 2*pi/samples.
std::vector<double> oracle_prevertices(const MapSpec& spec, int samples);

// The spec whose map is f(e^{i sigma} z): zeros rotate by -sigma and the
// pre-vertex arguments shift rigidly by -sigma.
MapSpec rotated_spec(const MapSpec& spec, double sigma);

}  // namespace scmap
