#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "scmap/analysis.hpp"
#include "scmap/polynomial.hpp"
#include "scmap/prevertex.hpp"
#include "scmap/verify.hpp"
#include "test_util.hpp"

using namespace scmap;

namespace {

// Roots of the worked-example quadratic r z^2 + (r^2 + 2r - 1) z + r = 0 by
// the quadratic formula; together with z = 1 these are the pre-vertices.
std::vector<double> quadratic_oracle_arguments(double r) {
  const double disc = -(1.0 - r * r) * (r * r + 4.0 * r - 1.0);
  REQUIRE(disc < 0.0);
  const Complex root =
      (Complex{1.0 - 2.0 * r - r * r, 0.0} + Complex{0.0, std::sqrt(-disc)}) /
      (2.0 * r);
  std::vector<double> ts{0.0, wrap_angle(std::arg(root)), wrap_angle(-std::arg(root))};
  std::sort(ts.begin(), ts.end());
  return ts;
}

}  // namespace

TEST_CASE("to_polynomial trivial and worked examples") {
  MapSpec trivial;
  trivial.kind = MapKind::Interior;
  const std::vector<Complex> p = to_polynomial(trivial);
  REQUIRE(p.size() == 2);
  CHECK(std::abs(p[0] - Complex{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(p[1] - Complex{1.0, 0.0}) < 1e-15);

  // Koebe: z(1 + z/2) - (z + 1/2) = (z^2 - 1)/2.
  const std::vector<Complex> koebe = to_polynomial(testutil::koebe_spec());
  REQUIRE(koebe.size() == 3);
  CHECK(std::abs(koebe[0] - Complex{-0.5, 0.0}) < 1e-15);
  CHECK(std::abs(koebe[1]) < 1e-15);
  CHECK(std::abs(koebe[2] - Complex{0.5, 0.0}) < 1e-15);

  // Worked pair at r = 0.6: proportional to (z - 1)(r z^2 + (r^2+2r-1) z + r).
  const double r = 0.6;
  std::vector<Complex> want{Complex{r, 0.0}, Complex{r * r + 2.0 * r - 1.0, 0.0},
                            Complex{r, 0.0}};
  multiply_linear(want, Complex{1.0, 0.0});
  const std::vector<Complex> got = to_polynomial(testutil::symmetric_pair_spec(r));
  REQUIRE(got.size() == want.size());
  const Complex ratio = got.back() / want.back();
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i] - ratio * want[i]) < 1e-14);
  }
}

TEST_CASE("to_polynomial degree collapse when B2 nearly vanishes at 0") {
  MapSpec spec;
  spec.kind = MapKind::Interior;
  spec.b2 = BlaschkeProduct(UnitComplex(0.5), {DiskZero(Complex{1e-13, 0.0})});
  CHECK_THROWS_AS(to_polynomial(spec), DegreeCollapseError);
}

TEST_CASE("solve_prevertices on the Koebe pair") {
  const PrevertexSet pvs = solve_prevertices(testutil::koebe_spec());
  REQUIRE(pvs.points.size() == 2);
  CHECK(std::abs(pvs.points[0].t) < 1e-12);
  CHECK(pvs.points[1].t == doctest::Approx(kTwoPi / 2.0).epsilon(1e-12));
  CHECK(std::abs(pvs.points[0].z - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(pvs.points[1].z - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("solve_prevertices on the worked pair r = 0.6 against the quadratic") {
  const PrevertexSet pvs = solve_prevertices(testutil::symmetric_pair_spec(0.6));
  REQUIRE(pvs.points.size() == 3);
  const std::vector<double> expected = quadratic_oracle_arguments(0.6);
  CHECK(circular_match_distance(expected, pvs.arguments()) < 1e-12);
  for (const Prevertex& p : pvs.points) {
    CHECK(std::abs(std::abs(p.z) - 1.0) < 1e-14);
  }
}

TEST_CASE("solve_prevertices rejects the worked pair below the threshold") {
  CHECK_THROWS_AS(solve_prevertices(testutil::symmetric_pair_spec(0.2)),
                  InadmissibleError);
}

TEST_CASE("solve_prevertices argument checks") {
  CHECK_THROWS_AS(solve_prevertices(testutil::koebe_spec(), 1e-3), PreconditionError);
  CHECK_THROWS_AS(solve_prevertices(testutil::koebe_spec(), 1e-13), PreconditionError);

  MapSpec shared;
  shared.kind = MapKind::Interior;
  shared.b1 = BlaschkeProduct(UnitComplex(0.0), {DiskZero(Complex{0.3, 0.0})});
  shared.b2 = BlaschkeProduct(UnitComplex(1.0), {DiskZero(Complex{0.3, 0.0})});
  CHECK_THROWS_AS(solve_prevertices(shared), PreconditionError);
}

TEST_CASE("oracle_prevertices examples") {
  const std::vector<double> koebe = oracle_prevertices(testutil::koebe_spec(), 4096);
  REQUIRE(koebe.size() == 2);
  CHECK(std::abs(koebe[0]) < 1e-9);
  CHECK(koebe[1] == doctest::Approx(kTwoPi / 2.0).epsilon(1e-9));

  MapSpec trivial;
  trivial.kind = MapKind::Interior;
  const std::vector<double> single = oracle_prevertices(trivial, 1024);
  REQUIRE(single.size() == 1);
  CHECK(std::abs(single[0]) < 1e-9);

  const PrevertexSet pvs = solve_prevertices(testutil::symmetric_pair_spec(0.6));
  const std::vector<double> crossings =
      oracle_prevertices(testutil::symmetric_pair_spec(0.6), 4096);
  CHECK(circular_match_distance(crossings, pvs.arguments()) < 1e-8);

  CHECK_THROWS_AS(oracle_prevertices(trivial, 512), PreconditionError);
}

TEST_CASE("oracle_prevertices reports crossings tighter than its grid") {
  // The minimum-separation extremal configuration at n = 6, r = 0.998 has a
  // consecutive pre-vertex gap of ~3e-3, below the 1024-sample grid pitch.
  MapSpec spec;
  spec.kind = MapKind::Interior;
  spec.b1 = BlaschkeProduct(
      UnitComplex(0.0),
      std::vector<DiskZero>(6, DiskZero(0.998 * std::polar(1.0, kTwoPi / 14.0))));
  CHECK_THROWS_AS(oracle_prevertices(spec, 1024), OracleMissError);
  // A finer grid resolves the same pair.
  const std::vector<double> crossings = oracle_prevertices(spec, 1 << 15);
  CHECK(crossings.size() == 7);
}

TEST_CASE("root count, simplicity, and oracle agreement on random specs") {
  Rng rng(606);
  SamplerPolicy policy;
  int starvation = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const MapSpec spec = sample_admissible_spec(rng, policy, &starvation);
    const std::vector<Complex> p = to_polynomial(spec);
    const PrevertexSet pvs = solve_prevertices(spec);
    CHECK(static_cast<int>(pvs.points.size()) == static_cast<int>(p.size()) - 1);
    CHECK(static_cast<int>(pvs.points.size()) == spec.prevertex_count());

    const double coeff_scale = max_coefficient_magnitude(p);
    for (const Prevertex& pv : pvs.points) {
      CHECK(std::abs(horner(p, pv.z).derivative) > 1e-8 * coeff_scale);
    }

    const std::vector<double> crossings = oracle_prevertices(spec, 8192);
    CHECK(circular_match_distance(crossings, pvs.arguments()) < 1e-7);
  }
}

TEST_CASE("rotation covariance shifts the arguments rigidly") {
  const double sigma = kTwoPi / 14.0;  // pi / 7
  Rng rng(707);
  SamplerPolicy policy;
  int starvation = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const MapSpec spec = sample_admissible_spec(rng, policy, &starvation);
    const PrevertexSet base = solve_prevertices(spec);
    const PrevertexSet rotated = solve_prevertices(rotated_spec(spec, sigma));
    std::vector<double> shifted;
    for (double t : base.arguments()) shifted.push_back(wrap_angle(t - sigma));
    std::sort(shifted.begin(), shifted.end());
    CHECK(circular_match_distance(shifted, rotated.arguments()) < 1e-9);
  }
}
