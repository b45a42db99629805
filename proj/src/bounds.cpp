#include "scmap/bounds.hpp"

#include <cmath>

namespace scmap {

namespace {

constexpr double kPi = kTwoPi / 2.0;

// Right side of the separation equations, increasing in the half-gap.
// scale = lambda for the minimum equation, 1/lambda for the maximum.
double separation_equation(int m, int n, double scale, double half_gap) {
  return m * half_gap + 2.0 * n * std::atan(scale * std::tan(0.5 * half_gap));
}

double solve_separation(MapKind kind, int n, double scale, double hi) {
  const int m = circle_multiplicity(kind);
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (separation_equation(m, n, scale, mid) < kPi) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  return lo + 0.5 * (hi - lo);
}

void check_separation_args(int n, double r) {
  if (n < 1) throw PreconditionError("separation: n must be >= 1");
  if (!(r >= 0.0 && r < 1.0)) throw PreconditionError("separation: r must lie in [0, 1)");
}

}  // namespace

double min_separation(MapKind kind, int n, double r) {
  check_separation_args(n, r);
  const double lambda = (1.0 + r) / (1.0 - r);
  // The root lies in (0, pi/m): the right side exceeds pi at the upper end.
  const double hi = kPi / circle_multiplicity(kind);
  return 2.0 * solve_separation(kind, n, lambda, hi * (1.0 - 1e-15));
}

double max_separation(MapKind kind, int n, double r) {
  check_separation_args(n, r);
  const double lambda = (1.0 + r) / (1.0 - r);
  const double hi = kPi / circle_multiplicity(kind);
  return 2.0 * solve_separation(kind, n, 1.0 / lambda, hi * (1.0 - 1e-15));
}

SeparationBound separation_bounds(MapKind kind, int n, double r) {
  SeparationBound b;
  b.kind = kind;
  b.n = n;
  b.r = r;
  b.two_theta_min = min_separation(kind, n, r);
  b.two_psi_max = max_separation(kind, n, r);
  return b;
}

std::pair<double, double> concentration_window(MapKind kind, int n, double eps) {
  if (!(eps >= 0.0 && eps <= 0.05)) {
    throw PreconditionError("concentration_window: eps must lie in [0, 0.05]");
  }
  const int m = circle_multiplicity(kind);
  return {kPi / (m + (1.0 + 2.0 * eps) * n), kPi / (m + (1.0 - 2.0 * eps) * n)};
}

BlaschkeProduct extremal_configuration(MapKind kind, int n, double r,
                                       ExtremalKind which) {
  check_separation_args(n, r);
  const int p = n + circle_multiplicity(kind);
  Complex u{1.0, 0.0};
  if (which == ExtremalKind::MinSep) {
    u = std::polar(1.0, kPi / p);  // principal root of u^p = -1
  } else {
    // u^p = (-1)^(p-1): principal root is 1 when p is odd, e^{i pi/p} when even.
    if (p % 2 == 0) u = std::polar(1.0, kPi / p);
  }
  std::vector<DiskZero> zeros(n, DiskZero(r * u));
  return BlaschkeProduct(UnitComplex(0.0), std::move(zeros));
}

Consistency mixed_separation_check(MapKind kind, int d1, int d2, double r,
                                   double two_delta, PairKind pair) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw PreconditionError("mixed_separation_check: r must lie in [0, 1)");
  }
  if (!(two_delta > 0.0 && two_delta < kTwoPi)) {
    throw PreconditionError("mixed_separation_check: gap must lie in (0, 2pi)");
  }
  const double delta = 0.5 * two_delta;
  const double x = std::tan(0.5 * delta);
  const double lambda = (1.0 + r) / (1.0 - r);
  const double base = kind == MapKind::Interior ? delta : 2.0 * delta;
  const double lower =
      base + 2.0 * d1 * std::atan(x / lambda) - 2.0 * d2 * std::atan(lambda * x);
  const double upper =
      base + 2.0 * d1 * std::atan(lambda * x) - 2.0 * d2 * std::atan(x / lambda);
  const double target = pair == PairKind::ConvexConvex ? kPi : -kPi;
  const double slack = 1e-9;
  return (lower <= target + slack && target <= upper + slack)
             ? Consistency::Consistent
             : Consistency::Violated;
}

RadiusBound zero_radius_lower_bound(MapKind kind, int d1, int d2) {
  if (d2 < 1) {
    throw PreconditionError("zero_radius_lower_bound: requires d2 >= 1");
  }
  if (d1 < 0) throw PreconditionError("zero_radius_lower_bound: d1 must be >= 0");

  double concave_side, convex_side;
  if (kind == MapKind::Interior) {
    const double root = std::sqrt(4.0 * d1 * d2 + 9.0);
    concave_side = (root + 3.0 - 2.0 * d2) / (root + 3.0 + 2.0 * d2);
    const double root2 = std::sqrt(1.0 + 4.0 * d1 * d2);
    convex_side = (2.0 * d2 - 1.0 - root2) / (2.0 * d2 + 1.0 + root2);
  } else {
    const double root = std::sqrt(static_cast<double>(d1) * d2 + 4.0);
    concave_side = (root + 2.0 - d2) / (root + 2.0 + d2);
    const double root2 = std::sqrt(1.0 + static_cast<double>(d1) * d2);
    convex_side = (d2 - 1.0 - root2) / (d2 + 1.0 + root2);
  }

  RadiusBound bound;
  bound.kind = kind;
  bound.d1 = d1;
  bound.d2 = d2;
  bound.r_min = std::max({concave_side, convex_side, 0.0});
  return bound;
}

BoundVerdict convexity_radius_check(const MapSpec& spec, int samples) {
  if (spec.kind != MapKind::Interior) {
    throw PreconditionError("convexity_radius_check: interior specs only");
  }
  if (samples < 512) {
    throw PreconditionError("convexity_radius_check: samples must be >= 512");
  }
  const double radius = 2.0 - std::sqrt(3.0);
  // Boundary circle |z| = 2 - sqrt(3), plus a coarse grid of inner circles.
  // Equality within 1e-12 is tolerated: the extremal map attains
  // |z B1| = |B2| exactly on the critical circle.
  for (int ring = 4; ring >= 1; --ring) {
    const double rho = radius * ring / 4.0;
    const int count = ring == 4 ? samples : samples / 4;
    for (int j = 0; j < count; ++j) {
      const double t = kTwoPi * j / count;
      const Complex z = std::polar(rho, t);
      if (std::abs(z * eval(spec.b1, z)) > std::abs(eval(spec.b2, z)) + 1e-12) {
        return BoundVerdict::Fail;
      }
    }
  }
  return BoundVerdict::Pass;
}

}  // namespace scmap
