#pragma once

#include <utility>

#include "scmap/prevertex.hpp"

namespace scmap {

// Separation window for convex maps whose B1 zeros satisfy |a_k| <= r.
struct SeparationBound {
  MapKind kind = MapKind::Interior;
  int n = 1;                  // degree of the Blaschke product
  double r = 0.0;             // zero-radius bound
  double two_theta_min = 0.0; // minimum consecutive pre-vertex gap
  double two_psi_max = 0.0;   // maximum consecutive pre-vertex gap
};

// Smallest possible gap between consecutive pre-vertices: 2*theta with theta
// the unique root of pi = m theta + 2n arctan(lambda tan(theta/2)) in
// (0, pi/m), lambda = (1+r)/(1-r). Bisection to 1e-12.
double min_separation(MapKind kind, int n, double r);

// Largest possible gap: 2*psi from pi = m psi + 2n arctan(tan(psi/2)/lambda).
double max_separation(MapKind kind, int n, double r);

SeparationBound separation_bounds(MapKind kind, int n, double r);

// Small-zero window (pi/(m + (1+2 eps) n), pi/(m + (1-2 eps) n)) bracketing
// both half-separations theta and psi up to O(eps^2) for |a_k| <= eps.
std::pair<double, double> concentration_window(MapKind kind, int n, double eps);

// The empirical O(eps^2) widening constant used by the tests.
inline constexpr double kConcentrationWindowC = 10.0;

enum class ExtremalKind { MinSep, MaxSep };

// The degree-n product with all zeros at r*u attaining the separation bound,
// where u is the principal root of c^{n+m} = -1 (MinSep) or
// d^{n+m} = (-1)^{n+m-1} (MaxSep).
BlaschkeProduct extremal_configuration(MapKind kind, int n, double r,
                                       ExtremalKind which);

enum class PairKind { ConvexConvex, ConcaveConcave };
enum class Consistency { Consistent, Violated };

// Checks the two-sided separation inequality for a consecutive same-label
// pre-vertex pair at gap 2*delta, with zeros of B1, B2 inside |z| <= r:
//   T0 + 2 d1 arctan(x/lambda) - 2 d2 arctan(lambda x) <= T
//     <= T0 + 2 d1 arctan(lambda x) - 2 d2 arctan(x/lambda),
// x = tan(delta/2), T = pi (convex pair) or -pi (concave pair), and
// T0 = delta (interior) or 2*delta (exterior).
Consistency mixed_separation_check(MapKind kind, int d1, int d2, double r,
                                   double two_delta, PairKind pair);

struct RadiusBound {
  MapKind kind = MapKind::Interior;
  int d1 = 0;
  int d2 = 1;
  double r_min = 0.0;
};

// Necessary lower bound on the smallest centered disk radius containing all
// zeros when d2 >= 1. Throws PreconditionError for d2 == 0 (convex maps put
// no restriction on the zeros).
RadiusBound zero_radius_lower_bound(MapKind kind, int d1, int d2);

enum class BoundVerdict { Pass, Fail };

// Samples |z| = 2 - sqrt(3) and a coarse inner grid and verifies
// |z B1(z)| < |B2(z)| everywhere; failure marks the spec as not arising from
// any univalent polygon map. Interior specs only.
BoundVerdict convexity_radius_check(const MapSpec& spec, int samples);

}  // namespace scmap
