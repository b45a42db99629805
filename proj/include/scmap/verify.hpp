#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scmap/spec_io.hpp"

namespace scmap {

// Deterministic uniform generator (fixed mt19937_64 stream; no library
// distributions, so output is identical across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }
  Complex disk_point(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = uniform(0.0, kTwoPi);
    return std::polar(r, t);
  }

 private:
  std::mt19937_64 engine_;
};

struct SamplerPolicy {
  int max_d1 = 6;
  int max_d2 = 3;
  int redraws_per_trial = 50;
  // Specs whose smallest |phi'(t_k)| falls below this margin are redrawn:
  // near the admissibility boundary the angles are ill conditioned.
  double min_angle_margin = 0.02;
};

// Draws an admissible spec; bumps *starvation_warnings each time a degree
// tuple exhausts its redraw budget and fresh degrees are drawn.
MapSpec sample_admissible_spec(Rng& rng, const SamplerPolicy& policy,
                               int* starvation_warnings);

struct SuiteResult {
  std::string name;
  int pass = 0;
  int fail = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 200;
  int oracle_samples = 8192;
  int winding_samples = 4096;
  SamplerPolicy sampler;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  int starvation_warnings = 0;
  int specs_with_concave = 0;  // sampled specs with d2 >= 1
  bool ok = false;
  std::string failing_spec_json;  // first failing spec, for replay
};

// Runs every property suite over `trials` sampled admissible specs.
// Deterministic given the options.
VerifyReport run_verification(const VerifyOptions& options);

// Best elementwise angular agreement between two sorted circular lists:
// min over cyclic shifts of the max |angle_distance|. Infinity when the
// sizes differ.
double circular_match_distance(const std::vector<double>& a,
                               const std::vector<double>& b);

}  // namespace scmap
