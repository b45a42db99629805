#include "scmap/prevertex.hpp"

#include <algorithm>
#include <cmath>

#include "scmap/analysis.hpp"
#include "scmap/polynomial.hpp"

namespace scmap {

void validate_spec(const MapSpec& spec) {
  if (!common_zero_check(spec.b1, spec.b2)) {
    throw PreconditionError("spec: common zero shared by b1 and b2");
  }
}

std::vector<double> PrevertexSet::arguments() const {
  std::vector<double> ts;
  ts.reserve(points.size());
  for (const Prevertex& p : points) ts.push_back(p.t);
  return ts;
}

std::vector<double> PrevertexSet::betas() const {
  std::vector<double> bs;
  bs.reserve(points.size());
  for (const Prevertex& p : points) bs.push_back(p.beta);
  return bs;
}

std::vector<Complex> to_polynomial(const MapSpec& spec) {
  validate_spec(spec);
  const int m = circle_multiplicity(spec.kind);

  std::vector<Complex> lhs{spec.b1.rotation().value()};
  for (const DiskZero& a : spec.b1.zeros()) multiply_linear(lhs, a.value());
  for (const DiskZero& b : spec.b2.zeros()) multiply_affine(lhs, -std::conj(b.value()));
  lhs.insert(lhs.begin(), m, Complex{0.0, 0.0});  // times z^m

  std::vector<Complex> rhs{spec.b2.rotation().value()};
  for (const DiskZero& b : spec.b2.zeros()) multiply_linear(rhs, b.value());
  for (const DiskZero& a : spec.b1.zeros()) multiply_affine(rhs, -std::conj(a.value()));

  std::vector<Complex> p(std::max(lhs.size(), rhs.size()), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < lhs.size(); ++i) p[i] += lhs[i];
  for (std::size_t i = 0; i < rhs.size(); ++i) p[i] -= rhs[i];

  while (p.size() > 1 && std::abs(p.back()) == 0.0) p.pop_back();
  if (std::abs(p.back()) < 1e-12) {
    throw DegreeCollapseError("to_polynomial: leading coefficient below 1e-12");
  }
  return p;
}

namespace {

// Newton steps for arg(w(e^{it})) = 0 (mod 2pi). Near a root, w is close to 1
// and the principal argument is well conditioned, so this recovers the root
// argument to machine precision regardless of the polynomial's conditioning.
double polish_on_circle(const MapSpec& spec, double t) {
  const int m = circle_multiplicity(spec.kind);
  for (int it = 0; it < 4; ++it) {
    const Complex z{std::cos(t), std::sin(t)};
    const Complex w = std::pow(z, m) * eval(spec.b1, z) / eval(spec.b2, z);
    const double residual = std::arg(w);
    const double speed = phi_prime(spec, t);
    if (std::abs(speed) < 1e-10) break;
    const double step = residual / speed;
    t -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return wrap_angle(t);
}

}  // namespace

PrevertexSet solve_prevertices(const MapSpec& spec, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-6)) {
    throw PreconditionError("solve_prevertices: tol must lie in [1e-12, 1e-6]");
  }
  validate_spec(spec);

  const std::vector<Complex> p = to_polynomial(spec);
  const std::vector<Complex> roots = aberth_roots(p);
  const int expected = spec.prevertex_count();
  if (static_cast<int>(roots.size()) != expected) {
    throw InadmissibleError("pre-vertex polynomial degree does not match the spec degrees");
  }

  for (const Complex& z : roots) {
    if (std::abs(std::abs(z) - 1.0) > tol) {
      throw InadmissibleError("pre-vertex root off the unit circle beyond tol");
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= 10.0 * tol) {
        throw InadmissibleError("pre-vertex root cluster detected");
      }
    }
  }

  PrevertexSet out;
  out.spec = spec;
  out.points.reserve(roots.size());
  for (const Complex& z : roots) {
    Prevertex pv;
    pv.t = polish_on_circle(spec, std::atan2(z.imag(), z.real()));
    if (kTwoPi - pv.t < 1e-12) pv.t = 0.0;
    pv.z = Complex{std::cos(pv.t), std::sin(pv.t)};
    out.points.push_back(pv);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const Prevertex& a, const Prevertex& b) { return a.t < b.t; });

  return exterior_angles(std::move(out));
}

std::vector<double> oracle_prevertices(const MapSpec& spec, int samples) {
  if (samples < 1024) {
    throw PreconditionError("oracle_prevertices: samples must be >= 1024");
  }
  validate_spec(spec);
  const int m = circle_multiplicity(spec.kind);

  const auto offset = [&](double t) {
    const Complex z{std::cos(t), std::sin(t)};
    return std::arg(std::pow(z, m) * eval(spec.b1, z) / eval(spec.b2, z));
  };

  const double h = kTwoPi / samples;
  std::vector<double> grid(samples);
  for (int j = 0; j < samples; ++j) grid[j] = offset(j * h);

  // If the boundary phase moves more than pi/2 between samples the grid
  // cannot certify that crossings are separated; crossings could hide inside
  // a single step.
  for (int j = 0; j < samples; ++j) {
    if (std::abs(angle_distance(grid[j], grid[(j + 1) % samples])) > kTwoPi / 4.0) {
      throw OracleMissError(
          "oracle_prevertices: phase step exceeds pi/2; increase samples");
    }
  }

  std::vector<double> found;
  for (int j = 0; j < samples; ++j) {
    const double da = grid[j];
    const double db = grid[(j + 1) % samples];
    if (da == 0.0) {
      found.push_back(wrap_angle(j * h));
      continue;
    }
    // A sign change of the principal argument is a crossing of w = 1 only
    // away from the +-pi wrap line.
    if (da * db < 0.0 && std::abs(da) < 1.5 && std::abs(db) < 1.5) {
      double lo = j * h;
      double hi = (j + 1) * h;
      double flo = da;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = offset(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      found.push_back(wrap_angle(0.5 * (lo + hi)));
    }
  }

  std::sort(found.begin(), found.end());
  if (!found.empty() && kTwoPi - found.back() < 1e-12) {
    found.back() = 0.0;
    std::sort(found.begin(), found.end());
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    const double next =
        (i + 1 < found.size()) ? found[i + 1] : found[0] + kTwoPi;
    if (found.size() > 1 && next - found[i] < h) {
      throw OracleMissError("oracle_prevertices: crossings closer than 2pi/samples");
    }
  }
  return found;
}

MapSpec rotated_spec(const MapSpec& spec, double sigma) {
  const auto rotate = [&](const BlaschkeProduct& b, double extra) {
    std::vector<DiskZero> zeros;
    zeros.reserve(b.zeros().size());
    for (const DiskZero& a : b.zeros()) {
      zeros.push_back(DiskZero(a.value() * std::polar(1.0, -sigma)));
    }
    return BlaschkeProduct(
        UnitComplex(b.rotation().angle() + b.degree() * sigma + extra),
        std::move(zeros));
  };
  // g(z) = f(e^{i sigma} z) has pair (e^{i m sigma} B1(e^{i sigma} z), B2(...)).
  MapSpec out;
  out.kind = spec.kind;
  out.b1 = rotate(spec.b1, circle_multiplicity(spec.kind) * sigma);
  out.b2 = rotate(spec.b2, 0.0);
  return out;
}

}  // namespace scmap
