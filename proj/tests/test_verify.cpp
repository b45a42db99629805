#include <doctest.h>

#include <sstream>

#include "scmap/verify.hpp"

using namespace scmap;

namespace {

std::string serialize(const VerifyReport& report) {
  std::ostringstream out;
  for (const SuiteResult& suite : report.suites) {
    out << suite.name << ":" << suite.pass << "/" << suite.fail << ";";
  }
  out << "starved=" << report.starvation_warnings;
  out << " concave=" << report.specs_with_concave;
  return out.str();
}

}  // namespace

TEST_CASE("circular match distance") {
  CHECK(circular_match_distance({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}) < 1e-15);
  // A near-wrap value aligns via a cyclic shift.
  CHECK(circular_match_distance({1.0, 2.0, 6.28318530717958}, {0.0, 1.0, 2.0}) < 1e-5);
  CHECK(circular_match_distance({0.0}, {0.0, 1.0}) ==
        std::numeric_limits<double>::infinity());
  CHECK(circular_match_distance({0.0, 1.0}, {0.0, 1.3}) == doctest::Approx(0.3));
}

TEST_CASE("sampler produces admissible specs within policy") {
  Rng rng(33);
  SamplerPolicy policy;
  int starvation = 0;
  int concave = 0;
  for (int i = 0; i < 20; ++i) {
    const MapSpec spec = sample_admissible_spec(rng, policy, &starvation);
    CHECK(spec.d1() <= policy.max_d1);
    CHECK(spec.d2() <= policy.max_d2);
    const PrevertexSet pvs = solve_prevertices(spec);
    CHECK(static_cast<int>(pvs.points.size()) == spec.prevertex_count());
    for (const Prevertex& p : pvs.points) {
      CHECK(std::abs(p.phi_prime) >= policy.min_angle_margin);
      if (spec.kind == MapKind::Interior) {
        CHECK(p.beta >= -0.5 - 1e-12);
        CHECK(p.beta <= 1.5 + 1e-12);
      } else {
        CHECK(std::abs(p.beta) <= 0.5 + 1e-12);
      }
    }
    if (spec.d2() >= 1) ++concave;
  }
  CHECK(concave > 0);
}

TEST_CASE("verification passes and is deterministic on a small run") {
  VerifyOptions options;
  options.seed = 7;
  options.trials = 25;
  const VerifyReport first = run_verification(options);
  CHECK(first.ok);
  for (const SuiteResult& suite : first.suites) CHECK(suite.fail == 0);

  const VerifyReport second = run_verification(options);
  CHECK(serialize(first) == serialize(second));

  VerifyOptions other = options;
  other.seed = 8;
  const VerifyReport third = run_verification(other);
  // Different seed, different sample path (pass counts almost surely differ
  // in at least one conditional suite).
  CHECK(serialize(first) != serialize(third));
}

TEST_CASE("verification rejects nonpositive trial counts") {
  VerifyOptions options;
  options.trials = 0;
  CHECK_THROWS_AS(run_verification(options), PreconditionError);
}
