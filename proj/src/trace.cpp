#include "scmap/trace.hpp"

#include <algorithm>
#include <cmath>

#include "scmap/geometry.hpp"
#include "scmap/quadrature.hpp"

namespace scmap {

namespace {

constexpr double kPi = kTwoPi / 2.0;
constexpr double kFiniteMargin = 1e-9;
constexpr double kRayClip = 1e-3;  // parameter distance kept from a singular end
const Complex kI{0.0, 1.0};

struct ArcGeometry {
  MapKind kind = MapKind::Interior;
  Complex scale;
  std::vector<double> ts;
  std::vector<double> es;  // edge exponents

  int count() const { return static_cast<int>(ts.size()); }
  double arc_end(int k) const {
    return k + 1 < count() ? ts[k + 1] : ts[0] + kTwoPi;
  }
  bool finite(int k) const { return es[k] > -1.0 + kFiniteMargin; }
  double pole_power() const { return kind == MapKind::Exterior ? 2.0 : 0.0; }
  double basepoint_radius() const { return kind == MapKind::Exterior ? 0.5 : 0.0; }
};

ArcGeometry make_geometry(const PrevertexSet& pvs, Complex scale) {
  ArcGeometry g;
  g.kind = pvs.spec.kind;
  g.scale = scale;
  for (const Prevertex& p : pvs.points) {
    g.ts.push_back(p.t);
    g.es.push_back(edge_exponent(pvs.spec.kind, p.beta));
  }
  return g;
}

Complex unit(double t) { return Complex{std::cos(t), std::sin(t)}; }

Complex derivative_at(const ArcGeometry& g, Complex z) {
  Complex logsum{0.0, 0.0};
  for (int j = 0; j < g.count(); ++j) {
    logsum += g.es[j] * std::log(1.0 - z * unit(-g.ts[j]));
  }
  Complex value = g.scale * std::exp(logsum);
  if (g.kind == MapKind::Exterior) value /= z * z;
  return value;
}

// (1 - e^{is})^e = (2 sin(s/2))^e exp(i e (s - pi)/2) for s in (0, 2pi);
// this returns only the unimodular phase part.
Complex singular_phase(double e, double s) {
  return std::polar(1.0, 0.5 * e * (s - kPi));
}

// 2 sin(s/2) / y with s = (L/2) y; smooth and positive for s in [0, 2pi).
double sine_ratio(double length, double y) {
  if (y < 1e-14) return 0.5 * length;
  return 2.0 * std::sin(0.25 * length * y) / y;
}

// Integral of f' dz over the full arc [t_k, t_{k+1}] with both endpoint
// singularities absorbed by the Gauss-Jacobi weight.
Complex arc_integral_full(const ArcGeometry& g, int k, int nodes) {
  const int next = (k + 1) % g.count();
  const double t0 = g.ts[k];
  const double t1 = g.arc_end(k);
  const double length = t1 - t0;
  const QuadratureRule rule = gauss_jacobi(nodes, g.es[next], g.es[k]);

  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double t = 0.5 * (t0 + t1) + 0.5 * length * x;
    const double s = t - t0;
    const double u = t1 - t;
    const Complex z = unit(t);

    Complex logsum{0.0, 0.0};
    for (int j = 0; j < g.count(); ++j) {
      if (j == k || j == next) continue;
      logsum += g.es[j] * std::log(1.0 - z * unit(-g.ts[j]));
    }
    logsum += g.es[k] * std::log(sine_ratio(length, 1.0 + x));
    logsum += g.es[next] * std::log(sine_ratio(length, 1.0 - x));
    logsum -= g.pole_power() * Complex{0.0, t};

    const Complex value = g.scale * std::exp(logsum) * singular_phase(g.es[k], s) *
                          std::conj(singular_phase(g.es[next], u)) * kI * z;
    sum += rule.weights[i] * value;
  }
  return 0.5 * length * sum;
}

// Integral of f' dz over [ta, tb] where the only singular endpoint is the
// pre-vertex t_k at one end (from_left: ta == t_k, else tb == t_k).
Complex arc_integral_partial(const ArcGeometry& g, int k, double ta, double tb,
                             bool from_left, int nodes) {
  const double length = tb - ta;
  if (length <= 0.0) return Complex{0.0, 0.0};
  const double e = g.es[k];
  const QuadratureRule rule =
      from_left ? gauss_jacobi(nodes, 0.0, e) : gauss_jacobi(nodes, e, 0.0);

  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double t = 0.5 * (ta + tb) + 0.5 * length * x;
    const double s = from_left ? t - ta : tb - t;
    const double y = from_left ? 1.0 + x : 1.0 - x;
    const Complex z = unit(t);

    Complex logsum{0.0, 0.0};
    for (int j = 0; j < g.count(); ++j) {
      if (j == k) continue;
      logsum += g.es[j] * std::log(1.0 - z * unit(-g.ts[j]));
    }
    logsum += e * std::log(sine_ratio(length, y));
    logsum -= g.pole_power() * Complex{0.0, t};

    Complex phase = singular_phase(e, s);
    if (!from_left) phase = std::conj(phase);
    sum += rule.weights[i] * g.scale * std::exp(logsum) * phase * kI * z;
  }
  return 0.5 * length * sum;
}

// Integral of f' dz along the radius [rho0 e^{i t_k}, e^{i t_k}] ending at
// pre-vertex k; the (1 - rho)^{e_k} factor is absorbed by the rule.
Complex radial_integral(const ArcGeometry& g, int k, int nodes) {
  const double rho0 = g.basepoint_radius();
  const double half = 0.5 * (1.0 - rho0);
  const double e = g.es[k];
  const QuadratureRule rule = gauss_jacobi(nodes, e, 0.0);
  const Complex zk = unit(g.ts[k]);

  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double rho = rho0 + half * (1.0 + x);
    const Complex z = rho * zk;

    Complex logsum{0.0, 0.0};
    for (int j = 0; j < g.count(); ++j) {
      if (j == k) continue;
      logsum += g.es[j] * std::log(1.0 - z * unit(-g.ts[j]));
    }
    logsum += e * std::log(half);
    Complex value = g.scale * std::exp(logsum) * zk;
    if (g.kind == MapKind::Exterior) value /= z * z;
    sum += rule.weights[i] * value;
  }
  return half * sum;
}

// f at the basepoint ray entry rho0 e^{i t}, relative to f(rho0) = 0
// (exterior maps only; the interior basepoint is the origin itself).
Complex basepoint_transport(const ArcGeometry& g, double t) {
  if (g.kind == MapKind::Interior) return Complex{0.0, 0.0};
  const double rho0 = g.basepoint_radius();
  return integrate_adaptive(
      [&](double tau) {
        const Complex z = rho0 * unit(tau);
        return derivative_at(g, z) * kI * z;
      },
      0.0, t, 1e-11);
}

Complex vertex_by_anchor(const ArcGeometry& g, int k, int nodes) {
  return basepoint_transport(g, g.ts[k]) + radial_integral(g, k, nodes);
}

std::vector<Complex> positions_at_resolution(const ArcGeometry& g, int nodes,
                                             double* closure_gap) {
  const int n = g.count();
  std::vector<Complex> pos(n, Complex{0.0, 0.0});
  std::vector<bool> have(n, false);

  // Anchor the first vertex of each maximal finite run, then chain along
  // boundary arcs inside the run.
  *closure_gap = 0.0;
  bool all_finite = true;
  for (int k = 0; k < n; ++k) all_finite = all_finite && g.finite(k);

  if (all_finite) {
    pos[0] = vertex_by_anchor(g, 0, nodes);
    have[0] = true;
    Complex cur = pos[0];
    for (int k = 0; k < n; ++k) {
      cur += arc_integral_full(g, k, nodes);
      if (k + 1 < n) {
        pos[k + 1] = cur;
        have[k + 1] = true;
      } else {
        *closure_gap = std::abs(cur - pos[0]);
      }
    }
    return pos;
  }

  for (int k = 0; k < n; ++k) {
    const int prev = (k + n - 1) % n;
    if (!g.finite(k)) continue;
    if (g.finite(prev) && have[prev]) {
      pos[k] = pos[prev] + arc_integral_full(g, prev, nodes);
      have[k] = true;
    } else if (!g.finite(prev)) {
      pos[k] = vertex_by_anchor(g, k, nodes);
      have[k] = true;
    }
  }
  // A run whose start we saw before its anchor: one more sweep settles it.
  for (int k = 0; k < n; ++k) {
    const int prev = (k + n - 1) % n;
    if (!g.finite(k) || have[k]) continue;
    if (have[prev]) {
      pos[k] = pos[prev] + arc_integral_full(g, prev, nodes);
      have[k] = true;
    }
  }
  return pos;
}

}  // namespace

double edge_exponent(MapKind kind, double beta) {
  return kind == MapKind::Interior ? -2.0 * beta : 2.0 * beta;
}

Complex map_derivative(const PrevertexSet& pvs, Complex scale, Complex z) {
  return derivative_at(make_geometry(pvs, scale), z);
}

Complex map_value(const PrevertexSet& pvs, Complex scale, Complex z) {
  const ArcGeometry g = make_geometry(pvs, scale);
  if (g.kind == MapKind::Interior) {
    return integrate_adaptive(
        [&](double sigma) { return derivative_at(g, sigma * z) * z; }, 0.0, 1.0,
        1e-11);
  }
  const double rho0 = g.basepoint_radius();
  const double t = std::atan2(z.imag(), z.real());
  const Complex along_ray = integrate_adaptive(
      [&](double rho) { return derivative_at(g, rho * unit(t)) * unit(t); }, rho0,
      std::abs(z), 1e-11);
  return basepoint_transport(g, t) + along_ray;
}

Complex arc_displacement(const PrevertexSet& pvs, Complex scale, int arc_index,
                         int nodes) {
  return arc_integral_full(make_geometry(pvs, scale), arc_index, nodes);
}

Complex arc_displacement_split(const PrevertexSet& pvs, Complex scale,
                               int arc_index, int nodes) {
  const ArcGeometry g = make_geometry(pvs, scale);
  const int next = (arc_index + 1) % g.count();
  const double t0 = g.ts[arc_index];
  const double t1 = g.arc_end(arc_index);
  const double mid = 0.5 * (t0 + t1);
  return arc_integral_partial(g, arc_index, t0, mid, true, nodes) +
         arc_integral_partial(g, next, mid, t1, false, nodes);
}

Complex anchored_vertex(const PrevertexSet& pvs, Complex scale, int vertex_index,
                        int nodes) {
  return vertex_by_anchor(make_geometry(pvs, scale), vertex_index, nodes);
}

PolygonTrace trace_polygon(const PrevertexSet& pvs, Complex scale, int nodes) {
  if (nodes < 8) throw PreconditionError("trace_polygon: nodes must be >= 8");
  if (pvs.points.empty()) throw PreconditionError("trace_polygon: empty pre-vertex set");
  const ArcGeometry g = make_geometry(pvs, scale);
  const int n = g.count();

  PolygonTrace trace;
  trace.kind = g.kind;
  trace.scale = scale;
  trace.vertices.resize(n);
  trace.edge_samples.resize(n);

  bool any_finite = false;
  for (int k = 0; k < n; ++k) {
    TraceVertex& v = trace.vertices[k];
    v.t = g.ts[k];
    v.beta = pvs.points[k].beta;
    v.finite = g.finite(k);
    any_finite = any_finite || v.finite;
  }

  // Edge tangents from f' at arc midpoints (each image edge is straight).
  for (int k = 0; k < n; ++k) {
    const double tm = 0.5 * (g.ts[k] + g.arc_end(k));
    const Complex z = unit(tm);
    const Complex tangent = derivative_at(g, z) * kI * z;
    const Complex dir = tangent / std::abs(tangent);
    trace.vertices[k].direction_out = dir;
    trace.vertices[(k + 1) % n].direction_in = dir;
  }

  trace.anchored = any_finite;
  if (!any_finite) return trace;  // directions only

  // Positions, with node doubling until stable.
  double gap = 0.0;
  std::vector<Complex> pos = positions_at_resolution(g, nodes, &gap);
  for (int budget = nodes * 2; budget <= 512; budget *= 2) {
    double gap2 = 0.0;
    const std::vector<Complex> refined = positions_at_resolution(g, budget, &gap2);
    double delta = 0.0;
    for (int k = 0; k < n; ++k) {
      if (g.finite(k)) delta = std::max(delta, std::abs(refined[k] - pos[k]));
    }
    pos = refined;
    gap = gap2;
    if (delta < 1e-8) break;
  }
  for (int k = 0; k < n; ++k) {
    if (g.finite(k)) trace.vertices[k].position = pos[k];
  }
  trace.closure_gap = gap;

  // Boundary samples along each arc that has a finite end.
  const int samples_per_edge = 17;
  const int partial_nodes = 48;
  for (int k = 0; k < n; ++k) {
    const int next = (k + 1) % n;
    const bool left = g.finite(k);
    const bool right = g.finite(next);
    if (!left && !right) continue;

    const double t0 = g.ts[k];
    const double t1 = g.arc_end(k);
    const double lo = t0 + (left ? 0.0 : kRayClip * (t1 - t0));
    const double hi = t1 - (right ? 0.0 : kRayClip * (t1 - t0));
    std::vector<Complex>& line = trace.edge_samples[k];
    for (int s = 0; s <= samples_per_edge; ++s) {
      const double t = lo + (hi - lo) * s / samples_per_edge;
      if (left) {
        if (s == 0) {
          line.push_back(pos[k]);
        } else if (s == samples_per_edge && right) {
          line.push_back(pos[next]);
        } else {
          line.push_back(pos[k] +
                         arc_integral_partial(g, k, t0, t, true, partial_nodes));
        }
      } else {
        if (s == samples_per_edge) {
          line.push_back(pos[next]);
        } else {
          line.push_back(pos[next] - arc_integral_partial(g, next, t, t1, false,
                                                          partial_nodes));
        }
      }
    }
  }
  return trace;
}

std::vector<Complex> boundary_curve(const PrevertexSet& pvs, Complex scale,
                                    double rho, int samples) {
  const ArcGeometry g = make_geometry(pvs, scale);
  static const QuadratureRule rule = gauss_legendre(4);

  std::vector<Complex> points;
  points.reserve(samples);
  Complex acc{0.0, 0.0};
  points.push_back(acc);
  for (int j = 0; j < samples - 1; ++j) {
    const double a = kTwoPi * j / samples;
    const double b = kTwoPi * (j + 1) / samples;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + half * rule.nodes[i];
      const Complex z = rho * unit(t);
      sum += rule.weights[i] * derivative_at(g, z) * kI * z;
    }
    acc += half * sum;
    points.push_back(acc);
  }
  return points;
}

Injectivity grid_injectivity(const PrevertexSet& pvs, Complex scale, double rho,
                             int samples) {
  if (samples < 2048) {
    throw PreconditionError("grid_injectivity: samples must be >= 2048");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    throw PreconditionError("grid_injectivity: rho must lie in (0, 1)");
  }

  // The polyline is resolution-limited; double until the verdict is stable.
  bool prev = closed_polyline_self_intersects(boundary_curve(pvs, scale, rho, samples));
  for (int n = samples * 2; n <= samples * 8; n *= 2) {
    const bool cur = closed_polyline_self_intersects(boundary_curve(pvs, scale, rho, n));
    if (cur == prev) break;
    prev = cur;
  }
  return prev ? Injectivity::SelfIntersecting : Injectivity::Injective;
}

}  // namespace scmap
