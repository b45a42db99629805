#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scmap/analysis.hpp"
#include "scmap/bounds.hpp"

namespace scmap {

// On-disk spec document:
//   {"kind": "interior"|"exterior",
//    "b1": {"rotation_deg": <real>, "zeros": [[re, im], ...]},
//    "b2": {...}}
// Angles are entered in degrees; everything math-facing downstream is in
// radians. Unknown fields are rejected. Throws ParseError.
MapSpec parse_spec_document(const nlohmann::json& doc);
nlohmann::json emit_spec_document(const MapSpec& spec);
MapSpec load_spec_file(const std::string& path);

struct AnalyzeOptions {
  double tol = 1e-8;
  int nodes = 32;
  int winding_samples = 4096;
  int convexity_samples = 1024;
};

struct ReportVertex {
  double t = 0.0;
  Complex z;
  double beta = 0.0;
  std::string label;  // "convex" | "concave"
};

struct UnivalenceReport {
  double sum_abs_beta = 0.0;
  bool theorem4_pass = false;
  bool theorem5_applicable = false;
  std::optional<bool> theorem5_pass;  // null unless applicable
};

struct BoundsReport {
  double min_sep = 0.0;
  double max_sep = 0.0;
  double r_used = 0.0;                 // max |zero| over b1 and b2
  std::optional<double> radius_bound;  // null when d2 == 0
};

struct AnalysisReport {
  bool admissible = false;
  int d1 = 0;
  int d2 = 0;
  std::string reason;  // populated when inadmissible
  MapKind kind = MapKind::Interior;
  std::vector<ReportVertex> prevertices;
  VertexCounts counts;
  int winding = 0;
  UnivalenceReport univalence;
  BoundsReport bounds;
  std::optional<bool> convexity_radius_pass;  // null for exterior specs
};

// Runs the full pipeline on a validated spec. An InadmissibleError or
// DegreeCollapseError from the solver yields admissible=false rather than a
// throw; other errors propagate.
AnalysisReport analyze_spec(const MapSpec& spec, const AnalyzeOptions& options = {});

// Lossless JSON round trip: parse_report(emit_report(x)) == x.
nlohmann::json emit_report(const AnalysisReport& report);
AnalysisReport parse_report(const nlohmann::json& doc);

}  // namespace scmap
