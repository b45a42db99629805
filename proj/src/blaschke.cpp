#include "scmap/blaschke.hpp"

#include <cmath>

namespace scmap {

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double angle_distance(double a, double b) {
  double d = std::fmod(b - a, kTwoPi);
  if (d > kTwoPi / 2.0) d -= kTwoPi;
  if (d <= -kTwoPi / 2.0) d += kTwoPi;
  return d;
}

Complex eval(const BlaschkeProduct& b, Complex z) {
  Complex w = b.rotation().value();
  for (const DiskZero& zero : b.zeros()) {
    const Complex a = zero.value();
    if (std::abs(a) > 0.0 && std::abs(z - 1.0 / std::conj(a)) < 1e-14) {
      throw PoleEvaluationError("eval: z coincides with a pole of the product");
    }
    w *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return w;
}

double boundary_derivative_magnitude(const BlaschkeProduct& b, double t) {
  const Complex z{std::cos(t), std::sin(t)};
  double sum = 0.0;
  for (const DiskZero& zero : b.zeros()) {
    const Complex a = zero.value();
    sum += (1.0 - std::norm(a)) / std::norm(z - a);
  }
  return sum;
}

bool common_zero_check(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  for (const DiskZero& p : b1.zeros()) {
    for (const DiskZero& q : b2.zeros()) {
      if (std::abs(p.value() - q.value()) < 1e-12) return false;
    }
  }
  return true;
}

BlaschkeProduct product(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<DiskZero> zeros = b1.zeros();
  zeros.insert(zeros.end(), b2.zeros().begin(), b2.zeros().end());
  return BlaschkeProduct(UnitComplex(b1.rotation().angle() + b2.rotation().angle()),
                         std::move(zeros));
}

}  // namespace scmap
