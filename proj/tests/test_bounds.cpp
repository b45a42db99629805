#include <doctest.h>

#include <cmath>

#include "scmap/bounds.hpp"
#include "scmap/verify.hpp"
#include "test_util.hpp"

using namespace scmap;

namespace {

constexpr double kPi = kTwoPi / 2.0;

double separation_residual(MapKind kind, int n, double r, double two_theta,
                           bool minimum) {
  const int m = circle_multiplicity(kind);
  const double lambda = (1.0 + r) / (1.0 - r);
  const double scale = minimum ? lambda : 1.0 / lambda;
  const double half = 0.5 * two_theta;
  return m * half + 2.0 * n * std::atan(scale * std::tan(0.5 * half)) - kPi;
}

std::vector<double> cyclic_gaps(const PrevertexSet& pvs) {
  std::vector<double> gaps;
  const int n = static_cast<int>(pvs.points.size());
  for (int k = 0; k < n; ++k) {
    const double next = (k + 1 < n) ? pvs.points[k + 1].t : pvs.points[0].t + kTwoPi;
    gaps.push_back(next - pvs.points[k].t);
  }
  return gaps;
}

}  // namespace

TEST_CASE("separation solvers reproduce the closed-form anchors") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(min_separation(MapKind::Interior, n, 0.0) ==
          doctest::Approx(kTwoPi / (n + 1)).epsilon(1e-12));
    CHECK(max_separation(MapKind::Interior, n, 0.0) ==
          doctest::Approx(kTwoPi / (n + 1)).epsilon(1e-12));
    CHECK(min_separation(MapKind::Exterior, n, 0.0) ==
          doctest::Approx(kTwoPi / (n + 2)).epsilon(1e-12));
    CHECK(max_separation(MapKind::Exterior, n, 0.0) ==
          doctest::Approx(kTwoPi / (n + 2)).epsilon(1e-12));
  }
  CHECK(min_separation(MapKind::Interior, 1, 0.5) ==
        doctest::Approx(kTwoPi / 3.0).epsilon(1e-12));
  CHECK(max_separation(MapKind::Interior, 1, 0.5) ==
        doctest::Approx(2.0 * kTwoPi / 3.0).epsilon(1e-12));
  // Frozen by an independent high-precision bisection.
  CHECK(max_separation(MapKind::Interior, 3, 0.9) ==
        doctest::Approx(4.7384549823272577).epsilon(1e-11));
  CHECK(min_separation(MapKind::Interior, 3, 0.9) ==
        doctest::Approx(0.11875042868211465).epsilon(1e-11));
}

TEST_CASE("separation roots satisfy their defining equations") {
  for (MapKind kind : {MapKind::Interior, MapKind::Exterior}) {
    for (int n : {1, 2, 4, 8}) {
      for (double r : {0.0, 0.1, 0.5, 0.9}) {
        CHECK(std::abs(separation_residual(kind, n, r, min_separation(kind, n, r),
                                           true)) < 1e-10);
        CHECK(std::abs(separation_residual(kind, n, r, max_separation(kind, n, r),
                                           false)) < 1e-10);
      }
    }
  }
}

TEST_CASE("separation monotonicity in r and n") {
  for (MapKind kind : {MapKind::Interior, MapKind::Exterior}) {
    for (int n = 1; n <= 8; ++n) {
      double prev_min = min_separation(kind, n, 0.0);
      double prev_max = max_separation(kind, n, 0.0);
      for (double r = 0.1; r < 0.95; r += 0.1) {
        const double cur_min = min_separation(kind, n, r);
        const double cur_max = max_separation(kind, n, r);
        CHECK(cur_min < prev_min);
        CHECK(cur_max > prev_max);
        prev_min = cur_min;
        prev_max = cur_max;
      }
    }
    for (double r : {0.0, 0.4, 0.8}) {
      for (int n = 2; n <= 8; ++n) {
        CHECK(min_separation(kind, n, r) < min_separation(kind, n - 1, r));
      }
    }
  }
  const SeparationBound bound = separation_bounds(MapKind::Interior, 3, 0.4);
  CHECK(bound.two_theta_min <= bound.two_psi_max);
}

TEST_CASE("concentration window") {
  const auto at_zero = concentration_window(MapKind::Interior, 4, 0.0);
  CHECK(at_zero.first == doctest::Approx(kPi / 5.0).epsilon(1e-15));
  CHECK(at_zero.second == doctest::Approx(kPi / 5.0).epsilon(1e-15));

  const auto interior = concentration_window(MapKind::Interior, 4, 0.01);
  CHECK(interior.first == doctest::Approx(kPi / 5.08).epsilon(1e-15));
  CHECK(interior.second == doctest::Approx(kPi / 4.92).epsilon(1e-15));

  const auto exterior = concentration_window(MapKind::Exterior, 4, 0.01);
  CHECK(exterior.first == doctest::Approx(kPi / 6.08).epsilon(1e-15));
  CHECK(exterior.second == doctest::Approx(kPi / 5.92).epsilon(1e-15));

  CHECK_THROWS_AS(concentration_window(MapKind::Interior, 4, 0.2), PreconditionError);

  for (MapKind kind : {MapKind::Interior, MapKind::Exterior}) {
    for (double eps : {0.005, 0.01, 0.02}) {
      for (int n = 1; n <= 10; ++n) {
        const auto window = concentration_window(kind, n, eps);
        const double pad = kConcentrationWindowC * eps * eps;
        const double theta = 0.5 * min_separation(kind, n, eps);
        const double psi = 0.5 * max_separation(kind, n, eps);
        CHECK(theta >= window.first - pad);
        CHECK(theta <= psi);
        CHECK(psi <= window.second + pad);
      }
    }
  }
}

TEST_CASE("extremal configurations attain the bounds") {
  // Principal roots of the defining unimodular equations.
  const BlaschkeProduct two = extremal_configuration(MapKind::Interior, 2, 0.5,
                                                     ExtremalKind::MinSep);
  CHECK(std::abs(two.zeros()[0].value() - 0.5 * std::polar(1.0, kPi / 3.0)) < 1e-15);
  const BlaschkeProduct one = extremal_configuration(MapKind::Interior, 1, 0.5,
                                                     ExtremalKind::MinSep);
  CHECK(std::abs(one.zeros()[0].value() - Complex{0.0, 0.5}) < 1e-15);
  const BlaschkeProduct ext2 = extremal_configuration(MapKind::Exterior, 2, 0.5,
                                                      ExtremalKind::MaxSep);
  CHECK(std::abs(ext2.zeros()[0].value() - 0.5 * std::polar(1.0, kPi / 4.0)) < 1e-15);

  for (MapKind kind : {MapKind::Interior, MapKind::Exterior}) {
    for (int n : {1, 3, 5}) {
      for (double r : {0.1, 0.5, 0.9}) {
        for (ExtremalKind which : {ExtremalKind::MinSep, ExtremalKind::MaxSep}) {
          MapSpec spec;
          spec.kind = kind;
          spec.b1 = extremal_configuration(kind, n, r, which);
          const PrevertexSet pvs = solve_prevertices(spec);
          const std::vector<double> gaps = cyclic_gaps(pvs);
          const double lo = min_separation(kind, n, r);
          const double hi = max_separation(kind, n, r);
          double extreme = which == ExtremalKind::MinSep ? 1e30 : -1e30;
          for (double gap : gaps) {
            CHECK(gap >= lo - 1e-9);
            CHECK(gap <= hi + 1e-9);
            extreme = which == ExtremalKind::MinSep ? std::min(extreme, gap)
                                                    : std::max(extreme, gap);
          }
          const double bound = which == ExtremalKind::MinSep ? lo : hi;
          CHECK(extreme == doctest::Approx(bound).epsilon(1e-8));
        }
      }
    }
  }

  // The minimum configuration's smallest gap is attained by exactly one pair
  // (the designated one); all other gaps are strictly larger.
  MapSpec spec;
  spec.kind = MapKind::Interior;
  spec.b1 = extremal_configuration(MapKind::Interior, 4, 0.5, ExtremalKind::MinSep);
  const std::vector<double> gaps = cyclic_gaps(solve_prevertices(spec));
  const double lo = min_separation(MapKind::Interior, 4, 0.5);
  int attained = 0;
  for (double gap : gaps) {
    if (std::abs(gap - lo) < 1e-7) {
      ++attained;
    } else {
      CHECK(gap > lo + 1e-4);
    }
  }
  CHECK(attained == 1);
}

TEST_CASE("universality of the separation window on random convex specs") {
  Rng rng(1111);
  int tested = 0;
  while (tested < 40) {
    MapSpec spec;
    spec.kind = rng.uniform() < 0.5 ? MapKind::Interior : MapKind::Exterior;
    const int n = 1 + rng.uniform_int(6);
    std::vector<DiskZero> zeros;
    double r_used = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex z = rng.disk_point(rng.uniform(0.05, 0.9));
      r_used = std::max(r_used, std::abs(z));
      zeros.push_back(DiskZero(z));
    }
    spec.b1 = BlaschkeProduct(UnitComplex(rng.uniform(0.0, kTwoPi)), std::move(zeros));
    PrevertexSet pvs;
    try {
      pvs = solve_prevertices(spec);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    const double lo = min_separation(spec.kind, n, r_used);
    const double hi = max_separation(spec.kind, n, r_used);
    for (double gap : cyclic_gaps(pvs)) {
      CHECK(gap >= lo - 1e-9);
      CHECK(gap <= hi + 1e-9);
    }
  }
}

TEST_CASE("mixed separation check") {
  // d2 = 0, r = 0: both arctan terms collapse and the bracket reduces to
  // (1 + d1) delta <= pi <= (1 + d1) delta, so consistency holds exactly when
  // 2 delta equals the uniform separation.
  const double uniform_gap = kTwoPi / 4.0;  // d1 = 3, interior
  CHECK(mixed_separation_check(MapKind::Interior, 3, 0, 0.0, uniform_gap,
                               PairKind::ConvexConvex) == Consistency::Consistent);
  CHECK(mixed_separation_check(MapKind::Interior, 3, 0, 0.0, uniform_gap * 0.9,
                               PairKind::ConvexConvex) == Consistency::Violated);

  // Worked pair: the convex-convex gap attains the right-hand side exactly.
  for (double r : {0.55, 0.6, 0.8}) {
    const PrevertexSet pvs = solve_prevertices(testutil::symmetric_pair_spec(r));
    REQUIRE(pvs.points.size() == 3);
    const double two_delta = pvs.points[2].t - pvs.points[1].t;
    CHECK(mixed_separation_check(MapKind::Interior, 1, 1, r, two_delta,
                                 PairKind::ConvexConvex) == Consistency::Consistent);
    const double delta = 0.5 * two_delta;
    const double x = std::tan(0.5 * delta);
    const double lambda = (1.0 + r) / (1.0 - r);
    const double rhs = delta + 2.0 * std::atan(lambda * x) - 2.0 * std::atan(x / lambda);
    CHECK(rhs == doctest::Approx(kPi).epsilon(1e-10));
  }

  CHECK_THROWS_AS(mixed_separation_check(MapKind::Interior, 1, 1, 0.5, 0.0,
                                         PairKind::ConvexConvex),
                  PreconditionError);
}

TEST_CASE("zero radius lower bound") {
  const RadiusBound koebe = zero_radius_lower_bound(MapKind::Interior, 0, 1);
  CHECK(koebe.r_min == doctest::Approx(0.5).epsilon(1e-15));

  // Interior d2 = 1: (sqrt(4n+5)+1)/(sqrt(4n+5)+5) with n = d1 + 1.
  for (int d1 = 0; d1 <= 6; ++d1) {
    const int n = d1 + 1;
    const double root = std::sqrt(4.0 * n + 5.0);
    const double expected = (root + 1.0) / (root + 5.0);
    CHECK(zero_radius_lower_bound(MapKind::Interior, d1, 1).r_min ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected >= 0.5 - 1e-15);
  }

  const RadiusBound exterior = zero_radius_lower_bound(MapKind::Exterior, 0, 1);
  CHECK(exterior.r_min == doctest::Approx(0.6).epsilon(1e-15));

  CHECK_THROWS_AS(zero_radius_lower_bound(MapKind::Interior, 3, 0), PreconditionError);
}

TEST_CASE("convexity radius check") {
  CHECK(convexity_radius_check(testutil::koebe_spec(), 512) == BoundVerdict::Pass);
  CHECK(convexity_radius_check(testutil::square_spec(), 512) == BoundVerdict::Pass);

  MapSpec inside;
  inside.kind = MapKind::Interior;
  inside.b2 = BlaschkeProduct(UnitComplex(0.0), {DiskZero(Complex{0.1, 0.0})});
  CHECK(convexity_radius_check(inside, 512) == BoundVerdict::Fail);

  CHECK_THROWS_AS(convexity_radius_check(testutil::koebe_spec(), 100), PreconditionError);
  MapSpec exterior;
  exterior.kind = MapKind::Exterior;
  CHECK_THROWS_AS(convexity_radius_check(exterior, 512), PreconditionError);
}
