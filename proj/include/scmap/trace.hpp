#pragma once

#include <vector>

#include "scmap/analysis.hpp"

namespace scmap {

// Edge exponent of the pre-vertex factor in f': (1 - z/z_k)^{e_k} with
// e_k = -2 beta_k (interior) or +2 beta_k (exterior). The vertex image is
// finite iff e_k > -1, i.e. the edge integral converges there.
double edge_exponent(MapKind kind, double beta);

// f'(z) = scale * prod_k (1 - z/z_k)^{e_k}, times z^{-2} for exterior maps.
// Defined for |z| <= 1, z away from the pre-vertices (and 0 for exterior).
Complex map_derivative(const PrevertexSet& pvs, Complex scale, Complex z);

// f(z) anchored at f(0) = 0 (interior) or f(1/2) = 0 (exterior), by
// quadrature of f' along an interior path. Requires |z| < 1.
Complex map_value(const PrevertexSet& pvs, Complex scale, Complex z);

struct TraceVertex {
  double t = 0.0;
  double beta = 0.0;
  bool finite = false;
  Complex position;       // valid iff finite
  Complex direction_in;   // unit tangent of the edge arriving at the vertex
  Complex direction_out;  // unit tangent of the edge leaving the vertex
};

struct PolygonTrace {
  MapKind kind = MapKind::Interior;
  Complex scale;
  std::vector<TraceVertex> vertices;
  // One polyline per boundary arc (empty when both arc ends are infinite).
  std::vector<std::vector<Complex>> edge_samples;
  // False when the polygon has no finite vertex at all; only edge directions
  // are reported then.
  bool anchored = false;
  // Mismatch when chaining arc displacements all the way around
  // (all-finite polygons only; 0 otherwise).
  double closure_gap = 0.0;
};

// Integrates f' along each boundary arc with Gauss-Jacobi rules whose
// endpoint weights absorb the singular exponents; vertices with divergent
// edge integrals are marked infinite. Node count starts at `nodes` per arc
// and doubles until successive vertex estimates agree to 1e-8.
PolygonTrace trace_polygon(const PrevertexSet& pvs, Complex scale, int nodes = 32);

// Displacement f(z_{k+1}) - f(z_k) along boundary arc k (both ends finite).
Complex arc_displacement(const PrevertexSet& pvs, Complex scale, int arc_index,
                         int nodes);

// Same displacement, but integrating each half of the arc from its own
// vertex end and summing. Independent path for the path-independence check.
Complex arc_displacement_split(const PrevertexSet& pvs, Complex scale,
                               int arc_index, int nodes);

// Position of finite vertex k by radial anchoring from the interior
// basepoint, independent of the boundary chaining.
Complex anchored_vertex(const PrevertexSet& pvs, Complex scale, int vertex_index,
                        int nodes);

// The closed curve f(rho e^{it}) as a polyline of `samples` cumulative
// quadrature steps.
std::vector<Complex> boundary_curve(const PrevertexSet& pvs, Complex scale,
                                    double rho, int samples);

enum class Injectivity { Injective, SelfIntersecting };

// Heuristic univalence probe: traces f(rho e^{it}) and tests the polyline
// for self-intersection, doubling the resolution until the verdict is
// stable. Resolution-limited by construction.
Injectivity grid_injectivity(const PrevertexSet& pvs, Complex scale,
                             double rho = 0.99, int samples = 2048);

}  // namespace scmap
