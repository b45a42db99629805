#pragma once

#include <complex>
#include <vector>

#include "scmap/errors.hpp"

namespace scmap {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Wraps an angle into [0, 2*pi).
double wrap_angle(double t);

// Shorter signed arc from angle a to angle b, in (-pi, pi].
double angle_distance(double a, double b);

// A unimodular constant stored as its argument, so |value()| == 1 exactly.
class UnitComplex {
 public:
  UnitComplex() = default;
  explicit UnitComplex(double angle) : angle_(wrap_angle(angle)) {}

  double angle() const { return angle_; }
  Complex value() const { return Complex{std::cos(angle_), std::sin(angle_)}; }

 private:
  double angle_ = 0.0;
};

// A zero strictly inside the unit disk.
class DiskZero {
 public:
  explicit DiskZero(Complex value) : value_(value) {
    if (std::abs(value) >= 1.0 - 1e-12) {
      throw PreconditionError("DiskZero: |value| must be < 1 - 1e-12");
    }
  }

  Complex value() const { return value_; }

 private:
  Complex value_;
};

// Finite Blaschke product c * prod (z - a_k)/(1 - conj(a_k) z).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(UnitComplex rotation, std::vector<DiskZero> zeros = {})
      : rotation_(rotation), zeros_(std::move(zeros)) {}

  int degree() const { return static_cast<int>(zeros_.size()); }
  UnitComplex rotation() const { return rotation_; }
  const std::vector<DiskZero>& zeros() const { return zeros_; }

 private:
  UnitComplex rotation_;
  std::vector<DiskZero> zeros_;
};

// c * prod (z - a_k)/(1 - conj(a_k) z). Throws PoleEvaluationError when z is
// within 1e-14 of a pole 1/conj(a_k).
Complex eval(const BlaschkeProduct& b, Complex z);

// |B'(e^{it})| = sum_k (1 - |a_k|^2) / |e^{it} - a_k|^2.
double boundary_derivative_magnitude(const BlaschkeProduct& b, double t);

// True iff no zero of b1 is within 1e-12 of a zero of b2.
bool common_zero_check(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

// Product of two Blaschke products (rotations multiply, zero lists concatenate).
BlaschkeProduct product(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

}  // namespace scmap
