#pragma once

#include <utility>
#include <vector>

#include "scmap/prevertex.hpp"

namespace scmap {

// phi'(t) = m + |B1'(e^{it})| - |B2'(e^{it})|, the angular speed of
// w(e^{it}) = e^{imt} B1/B2 along the unit circle.
double phi_prime(const MapSpec& spec, double t);

// Exact integral of phi' over [t0, t1] (t1 >= t0), via the closed-form
// antiderivative of the Poisson kernel. Equals the winding increment of w.
double phi_increment(const MapSpec& spec, double t0, double t1);

// Fills beta_k = 1/phi'(t_k), phi', and the convex/concave labels.
// Throws DegenerateAngleError when |phi'(t_k)| < 1e-10 at some pre-vertex.
PrevertexSet exterior_angles(PrevertexSet pvs);

// Adjacency statistics of the cyclic convex/concave label sequence.
struct VertexCounts {
  int convex = 0;      // a_runs + b_switches/2
  int concave = 0;     // c_runs + b_switches/2
  int a_runs = 0;      // consecutive convex-convex adjacencies
  int b_switches = 0;  // convex<->concave adjacencies
  int c_runs = 0;      // consecutive concave-concave adjacencies
};

// Counts labels and checks the degree identities concave == d2 and
// convex == d1 + m. Throws CountMismatchError when they fail.
VertexCounts vertex_counts(const PrevertexSet& pvs);

// Topological degree of w on the unit circle by sampled unwrapping; equals
// m + d1 - d2. Throws UnwrapFailureError when adjacent samples jump by more
// than pi (raise samples).
int winding_degree(const MapSpec& spec, int samples);

enum class BoundCheck { Pass, Fail };

// Sufficient condition for univalence of the traced map: sum |beta_k| <= 2.
// Fail is inconclusive.
BoundCheck univalence_bound(const std::vector<double>& betas);

// Refined test for conjugate-symmetric configurations with pre-vertices at
// +-1 carrying beta_plus and beta_minus (|beta| <= 1/2 there). With
// theta_+- = pi (1 - 2 beta_+-), passes iff
//   sum |beta_k| <= 3 + max(theta_+ - pi, 0)/pi + max(theta_- - pi, 0)/pi.
// Throws AsymmetricInputError when betas are not conjugate-pair symmetric.
BoundCheck univalence_bound_symmetric(const std::vector<double>& betas,
                                      double beta_plus, double beta_minus);

// Builds a PrevertexSet from raw (t, beta) data with no backing Blaschke
// pair (phi' is back-filled as 1/beta). For tracing and injectivity probes.
PrevertexSet formal_prevertex_set(MapKind kind, const std::vector<double>& ts,
                                  const std::vector<double>& betas);

}  // namespace scmap
