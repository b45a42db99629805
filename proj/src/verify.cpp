#include "scmap/verify.hpp"

#include <cmath>
#include <limits>

#include "scmap/trace.hpp"

namespace scmap {

namespace {

bool spec_is_well_conditioned(const MapSpec& spec, const SamplerPolicy& policy,
                              PrevertexSet* out) {
  try {
    PrevertexSet pvs = solve_prevertices(spec);
    for (const Prevertex& p : pvs.points) {
      if (std::abs(p.phi_prime) < policy.min_angle_margin) return false;
      // Exterior angles of an actual polygon map lie in [-pi, 0) at concave
      // vertices and do not exceed 3pi at convex ones (interior maps may put
      // vertices at infinity). Exterior maps send 0 to infinity inside the
      // image, so the polygon itself is bounded and every vertex is a finite
      // wedge: beta in (-1/2, 1/2). Root-admissible pairs outside these
      // ranges cannot arise from a polygon and are redrawn.
      if (spec.kind == MapKind::Interior) {
        if (p.beta < -0.5 - 1e-12 || p.beta > 1.5 + 1e-12) return false;
      } else {
        if (std::abs(p.beta) >= 0.5 + 1e-12) return false;
      }
    }
    *out = std::move(pvs);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

MapSpec sample_admissible_spec(Rng& rng, const SamplerPolicy& policy,
                               int* starvation_warnings) {
  for (;;) {
    const MapKind kind = rng.uniform() < 0.5 ? MapKind::Interior : MapKind::Exterior;
    const int d1 = rng.uniform_int(policy.max_d1 + 1);
    const double u = rng.uniform();
    int d2;
    if (u < 0.40) {
      d2 = 0;
    } else if (u < 0.70) {
      d2 = 1;
    } else if (u < 0.88) {
      d2 = 2;
    } else {
      d2 = 3;
    }
    const int d2_eff = std::min(d2, policy.max_d2);

    for (int attempt = 0; attempt < policy.redraws_per_trial; ++attempt) {
      const double rho1 = rng.uniform(0.25, 0.80);
      const double rho2 = rng.uniform(0.60, 0.95);
      std::vector<DiskZero> zeros1;
      for (int i = 0; i < d1; ++i) zeros1.push_back(DiskZero(rng.disk_point(rho1)));
      std::vector<DiskZero> zeros2;
      for (int i = 0; i < d2_eff; ++i) zeros2.push_back(DiskZero(rng.disk_point(rho2)));

      MapSpec spec;
      spec.kind = kind;
      spec.b1 = BlaschkeProduct(UnitComplex(rng.uniform(0.0, kTwoPi)), std::move(zeros1));
      spec.b2 = BlaschkeProduct(UnitComplex(rng.uniform(0.0, kTwoPi)), std::move(zeros2));
      if (!common_zero_check(spec.b1, spec.b2)) continue;

      PrevertexSet pvs;
      if (spec_is_well_conditioned(spec, policy, &pvs)) return spec;
    }
    ++*starvation_warnings;
  }
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) {
    throw PreconditionError("run_verification: trials must be >= 1");
  }

  VerifyReport report;
  report.suites = {
      {"concave-count"}, {"angle-sum"},    {"winding"},
      {"arc-increments"}, {"separation"},  {"mixed-separation"},
      {"zero-radius"},   {"injectivity"},  {"oracle-agreement"},
  };
  SuiteResult& counts_suite = report.suites[0];
  SuiteResult& angle_suite = report.suites[1];
  SuiteResult& winding_suite = report.suites[2];
  SuiteResult& arcs_suite = report.suites[3];
  SuiteResult& separation_suite = report.suites[4];
  SuiteResult& mixed_suite = report.suites[5];
  SuiteResult& radius_suite = report.suites[6];
  SuiteResult& injectivity_suite = report.suites[7];
  SuiteResult& oracle_suite = report.suites[8];

  Rng rng(options.seed);
  const double convexity_floor = 2.0 - std::sqrt(3.0);

  const auto record = [&](SuiteResult& suite, bool passed, const MapSpec& spec) {
    if (passed) {
      ++suite.pass;
    } else {
      ++suite.fail;
      if (report.failing_spec_json.empty()) {
        report.failing_spec_json = emit_spec_document(spec).dump();
      }
    }
  };

  for (int trial = 0; trial < options.trials; ++trial) {
    const MapSpec spec =
        sample_admissible_spec(rng, options.sampler, &report.starvation_warnings);
    const int m = circle_multiplicity(spec.kind);
    const PrevertexSet pvs = solve_prevertices(spec);
    const std::vector<double> betas = pvs.betas();
    const int count = static_cast<int>(pvs.points.size());
    if (spec.d2() >= 1) ++report.specs_with_concave;

    // Convex/concave counts against the degrees.
    bool counts_ok = true;
    try {
      vertex_counts(pvs);
    } catch (const CountMismatchError&) {
      counts_ok = false;
    }
    record(counts_suite, counts_ok, spec);

    // Angle sum, plus the exterior range invariant -1 < beta < 1.
    double beta_sum = 0.0;
    double beta_abs_sum = 0.0;
    bool betas_in_range = true;
    for (double b : betas) {
      beta_sum += b;
      beta_abs_sum += std::abs(b);
      if (spec.kind == MapKind::Exterior) {
        betas_in_range = betas_in_range && b > -1.0 && b < 1.0;
      }
    }
    record(angle_suite, std::abs(beta_sum - 1.0) <= 1e-9 && betas_in_range, spec);

    // Winding degree.
    bool winding_ok = false;
    try {
      winding_ok =
          winding_degree(spec, options.winding_samples) == m + spec.d1() - spec.d2();
    } catch (const UnwrapFailureError&) {
    }
    record(winding_suite, winding_ok, spec);

    // Arc increments of the boundary function between consecutive roots.
    bool arcs_ok = true;
    for (int k = 0; k < count; ++k) {
      const Prevertex& a = pvs.points[k];
      const Prevertex& b = pvs.points[(k + 1) % count];
      const double t1 = (k + 1 < count) ? b.t : b.t + kTwoPi;
      const double increment = phi_increment(spec, a.t, t1);
      double expected = 0.0;
      if (a.label == VertexLabel::Convex && b.label == VertexLabel::Convex) {
        expected = kTwoPi;
      } else if (a.label == VertexLabel::Concave && b.label == VertexLabel::Concave) {
        expected = -kTwoPi;
      }
      arcs_ok = arcs_ok && std::abs(increment - expected) <= 1e-6;
    }
    record(arcs_suite, arcs_ok, spec);

    double r_used = 0.0;
    for (const DiskZero& z : spec.b1.zeros()) r_used = std::max(r_used, std::abs(z.value()));
    for (const DiskZero& z : spec.b2.zeros()) r_used = std::max(r_used, std::abs(z.value()));

    // Separation window for convex specs.
    if (spec.d2() == 0 && spec.d1() >= 1) {
      const double lo = min_separation(spec.kind, spec.d1(), r_used);
      const double hi = max_separation(spec.kind, spec.d1(), r_used);
      bool inside = true;
      for (int k = 0; k < count; ++k) {
        const double next =
            (k + 1 < count) ? pvs.points[k + 1].t : pvs.points[0].t + kTwoPi;
        const double gap = next - pvs.points[k].t;
        inside = inside && gap >= lo - 1e-9 && gap <= hi + 1e-9;
      }
      record(separation_suite, inside, spec);
    }

    // Mixed-separation inequalities on consecutive same-label pairs.
    if (count >= 2) {
      bool mixed_ok = true;
      for (int k = 0; k < count; ++k) {
        const Prevertex& a = pvs.points[k];
        const Prevertex& b = pvs.points[(k + 1) % count];
        if (a.label != b.label) continue;
        const double t1 = (k + 1 < count) ? b.t : b.t + kTwoPi;
        const PairKind pair = a.label == VertexLabel::Convex ? PairKind::ConvexConvex
                                                             : PairKind::ConcaveConcave;
        mixed_ok = mixed_ok &&
                   mixed_separation_check(spec.kind, spec.d1(), spec.d2(), r_used,
                                          t1 - a.t, pair) == Consistency::Consistent;
      }
      record(mixed_suite, mixed_ok, spec);
    }

    // Zero-location necessity for specs with concave vertices.
    if (spec.d2() >= 1) {
      const RadiusBound bound = zero_radius_lower_bound(spec.kind, spec.d1(), spec.d2());
      bool radius_ok = r_used >= bound.r_min - 1e-9;
      for (const DiskZero& z : spec.b2.zeros()) {
        radius_ok = radius_ok && std::abs(z.value()) > convexity_floor;
      }
      if (spec.kind == MapKind::Interior) {
        radius_ok =
            radius_ok && convexity_radius_check(spec, 1024) == BoundVerdict::Pass;
      }
      record(radius_suite, radius_ok, spec);
    }

    // Univalence soundness of the traced map (interior form).
    if (spec.kind == MapKind::Interior && beta_abs_sum <= 2.0) {
      record(injectivity_suite,
             grid_injectivity(pvs, Complex{1.0, 0.0}) == Injectivity::Injective, spec);
    }

    // Polynomial solver against the boundary-sampling oracle.
    bool oracle_ok = false;
    try {
      const std::vector<double> crossings =
          oracle_prevertices(spec, options.oracle_samples);
      oracle_ok = circular_match_distance(crossings, pvs.arguments()) <= 1e-7;
    } catch (const OracleMissError&) {
    }
    record(oracle_suite, oracle_ok, spec);
  }

  report.ok = true;
  for (const SuiteResult& suite : report.suites) {
    report.ok = report.ok && suite.fail == 0;
  }
  return report;
}

double circular_match_distance(const std::vector<double>& a,
                               const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int shift = 0; shift < n; ++shift) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      worst = std::max(worst, std::abs(angle_distance(a[(k + shift) % n], b[k])));
    }
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace scmap
