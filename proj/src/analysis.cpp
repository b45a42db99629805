#include "scmap/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace scmap {

double phi_prime(const MapSpec& spec, double t) {
  return circle_multiplicity(spec.kind) +
         boundary_derivative_magnitude(spec.b1, t) -
         boundary_derivative_magnitude(spec.b2, t);
}

namespace {

// Antiderivative of the Poisson kernel (1-r^2)/|e^{is} - r|^2, continued
// monotonically across the branch points at s = pi (mod 2pi).
double poisson_antiderivative(double r, double s) {
  const double lambda = (1.0 + r) / (1.0 - r);
  const double k = std::floor((s + kTwoPi / 2.0) / kTwoPi);
  const double s0 = s - kTwoPi * k;
  double a;
  if (std::abs(std::abs(s0) - kTwoPi / 2.0) < 1e-15) {
    a = (s0 > 0.0 ? 1.0 : -1.0) * kTwoPi / 2.0;
  } else {
    a = 2.0 * std::atan(lambda * std::tan(0.5 * s0));
  }
  return a + kTwoPi * k;
}

}  // namespace

double phi_increment(const MapSpec& spec, double t0, double t1) {
  double total = circle_multiplicity(spec.kind) * (t1 - t0);
  for (const DiskZero& a : spec.b1.zeros()) {
    const double r = std::abs(a.value());
    const double tau = std::arg(a.value());
    total += poisson_antiderivative(r, t1 - tau) - poisson_antiderivative(r, t0 - tau);
  }
  for (const DiskZero& b : spec.b2.zeros()) {
    const double r = std::abs(b.value());
    const double tau = std::arg(b.value());
    total -= poisson_antiderivative(r, t1 - tau) - poisson_antiderivative(r, t0 - tau);
  }
  return total;
}

PrevertexSet exterior_angles(PrevertexSet pvs) {
  for (Prevertex& p : pvs.points) {
    const double speed = phi_prime(pvs.spec, p.t);
    if (std::abs(speed) < 1e-10) {
      throw DegenerateAngleError("exterior_angles: |phi'| < 1e-10 at a pre-vertex");
    }
    p.phi_prime = speed;
    p.beta = 1.0 / speed;
    p.label = speed > 0.0 ? VertexLabel::Convex : VertexLabel::Concave;
  }
  return pvs;
}

VertexCounts vertex_counts(const PrevertexSet& pvs) {
  const std::size_t n = pvs.points.size();
  VertexCounts counts;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexLabel cur = pvs.points[i].label;
    const VertexLabel next = pvs.points[(i + 1) % n].label;
    if (cur == VertexLabel::Convex && next == VertexLabel::Convex) {
      ++counts.a_runs;
    } else if (cur == VertexLabel::Concave && next == VertexLabel::Concave) {
      ++counts.c_runs;
    } else {
      ++counts.b_switches;
    }
    if (cur == VertexLabel::Convex) {
      ++counts.convex;
    } else {
      ++counts.concave;
    }
  }
  if (!pvs.formal) {
    const int m = circle_multiplicity(pvs.spec.kind);
    if (counts.concave != pvs.spec.d2() || counts.convex != pvs.spec.d1() + m) {
      throw CountMismatchError("vertex_counts: label counts disagree with the degrees");
    }
  }
  return counts;
}

int winding_degree(const MapSpec& spec, int samples) {
  if (samples < 1024) {
    throw PreconditionError("winding_degree: samples must be >= 1024");
  }
  const int m = circle_multiplicity(spec.kind);
  double total = 0.0;
  Complex prev = std::pow(Complex{1.0, 0.0}, m) * eval(spec.b1, Complex{1.0, 0.0}) /
                 eval(spec.b2, Complex{1.0, 0.0});
  for (int j = 1; j <= samples; ++j) {
    const double t = kTwoPi * j / samples;
    const Complex z{std::cos(t), std::sin(t)};
    const Complex cur = std::pow(z, m) * eval(spec.b1, z) / eval(spec.b2, z);
    const double jump = std::arg(cur / prev);
    // A true increment above pi aliases into (-pi, pi] and cannot be told
    // apart from a legitimate step; gate at pi/2 so aliasing is unreachable.
    if (std::abs(jump) > kTwoPi / 4.0) {
      throw UnwrapFailureError(
          "winding_degree: adjacent samples jump by more than pi/2; increase samples");
    }
    total += jump;
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

BoundCheck univalence_bound(const std::vector<double>& betas) {
  double sum = 0.0;
  double sum_abs = 0.0;
  for (double b : betas) {
    sum += b;
    sum_abs += std::abs(b);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw PreconditionError("univalence_bound: betas must sum to 1");
  }
  return sum_abs <= 2.0 + 1e-12 ? BoundCheck::Pass : BoundCheck::Fail;
}

BoundCheck univalence_bound_symmetric(const std::vector<double>& betas,
                                      double beta_plus, double beta_minus) {
  if (std::abs(beta_plus) > 0.5 + 1e-12 || std::abs(beta_minus) > 0.5 + 1e-12) {
    throw PreconditionError(
        "univalence_bound_symmetric: |beta_+-| must not exceed 1/2");
  }
  // The remaining betas must pair up (conjugate-symmetric configuration).
  std::vector<double> rest = betas;
  const auto remove_one = [&rest](double value) {
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (std::abs(rest[i] - value) < 1e-10) {
        rest.erase(rest.begin() + i);
        return true;
      }
    }
    return false;
  };
  if (!remove_one(beta_plus) || !remove_one(beta_minus)) {
    throw AsymmetricInputError(
        "univalence_bound_symmetric: beta_+- not present in the list");
  }
  std::sort(rest.begin(), rest.end());
  if (rest.size() % 2 != 0) {
    throw AsymmetricInputError("univalence_bound_symmetric: odd leftover count");
  }
  for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
    if (std::abs(rest[i] - rest[i + 1]) > 1e-10) {
      throw AsymmetricInputError(
          "univalence_bound_symmetric: betas are not conjugate-pair symmetric");
    }
  }

  const double pi = kTwoPi / 2.0;
  const double theta_plus = pi * (1.0 - 2.0 * beta_plus);
  const double theta_minus = pi * (1.0 - 2.0 * beta_minus);
  const double threshold = 3.0 + std::max(theta_plus - pi, 0.0) / pi +
                           std::max(theta_minus - pi, 0.0) / pi;
  double sum_abs = 0.0;
  for (double b : betas) sum_abs += std::abs(b);
  return sum_abs <= threshold + 1e-12 ? BoundCheck::Pass : BoundCheck::Fail;
}

PrevertexSet formal_prevertex_set(MapKind kind, const std::vector<double>& ts,
                                  const std::vector<double>& betas) {
  if (ts.size() != betas.size() || ts.empty()) {
    throw PreconditionError("formal_prevertex_set: ts and betas must match and be nonempty");
  }
  PrevertexSet out;
  out.spec.kind = kind;
  out.formal = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Prevertex p;
    p.t = wrap_angle(ts[i]);
    p.z = Complex{std::cos(p.t), std::sin(p.t)};
    p.beta = betas[i];
    p.phi_prime = betas[i] != 0.0 ? 1.0 / betas[i] : 0.0;
    p.label = betas[i] > 0.0 ? VertexLabel::Convex : VertexLabel::Concave;
    out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const Prevertex& a, const Prevertex& b) { return a.t < b.t; });
  return out;
}

}  // namespace scmap
