#include "scmap/spec_io.hpp"

#include <cmath>
#include <fstream>

#include "scmap/trace.hpp"

namespace scmap {

namespace {

constexpr double kPi = kTwoPi / 2.0;

void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const char* key : keys) {
    if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || item.key() == key;
    if (!known) throw ParseError(where + ": unknown field '" + item.key() + "'");
  }
}

double as_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

BlaschkeProduct parse_product(const nlohmann::json& obj, const std::string& where) {
  require_keys(obj, {"rotation_deg", "zeros"}, where);
  const double rotation = as_number(obj["rotation_deg"], where + ".rotation_deg") *
                          kPi / 180.0;
  if (!obj["zeros"].is_array()) throw ParseError(where + ".zeros: expected an array");
  std::vector<DiskZero> zeros;
  for (const auto& z : obj["zeros"]) {
    if (!z.is_array() || z.size() != 2) {
      throw ParseError(where + ".zeros: entries must be [re, im] pairs");
    }
    const Complex value{as_number(z[0], where + ".zeros"), as_number(z[1], where + ".zeros")};
    if (std::abs(value) >= 1.0 - 1e-12) {
      throw ParseError(where + ".zeros: zero not strictly inside the unit disk");
    }
    zeros.push_back(DiskZero(value));
  }
  return BlaschkeProduct(UnitComplex(rotation), std::move(zeros));
}

}  // namespace

MapSpec parse_spec_document(const nlohmann::json& doc) {
  require_keys(doc, {"kind", "b1", "b2"}, "spec");
  MapSpec spec;
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  if (kind == "interior") {
    spec.kind = MapKind::Interior;
  } else if (kind == "exterior") {
    spec.kind = MapKind::Exterior;
  } else {
    throw ParseError("spec.kind: expected \"interior\" or \"exterior\"");
  }
  spec.b1 = parse_product(doc["b1"], "spec.b1");
  spec.b2 = parse_product(doc["b2"], "spec.b2");
  if (!common_zero_check(spec.b1, spec.b2)) {
    throw ParseError("spec: common zero shared by b1 and b2");
  }
  return spec;
}

nlohmann::json emit_spec_document(const MapSpec& spec) {
  const auto product_json = [](const BlaschkeProduct& b) {
    nlohmann::json zeros = nlohmann::json::array();
    for (const DiskZero& z : b.zeros()) {
      zeros.push_back({z.value().real(), z.value().imag()});
    }
    return nlohmann::json{{"rotation_deg", b.rotation().angle() * 180.0 / kPi},
                          {"zeros", zeros}};
  };
  return nlohmann::json{
      {"kind", spec.kind == MapKind::Interior ? "interior" : "exterior"},
      {"b1", product_json(spec.b1)},
      {"b2", product_json(spec.b2)}};
}

MapSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec_document(doc);
}

namespace {

double max_zero_modulus(const MapSpec& spec) {
  double r = 0.0;
  for (const DiskZero& z : spec.b1.zeros()) r = std::max(r, std::abs(z.value()));
  for (const DiskZero& z : spec.b2.zeros()) r = std::max(r, std::abs(z.value()));
  return r;
}

// Conjugate symmetry of the solved configuration: pre-vertices at +-1 and the
// t list closed under t -> 2pi - t with matching betas.
bool detect_symmetry(const PrevertexSet& pvs, double* beta_plus, double* beta_minus) {
  const double tol = 1e-9;
  bool has_plus = false;
  bool has_minus = false;
  for (const Prevertex& p : pvs.points) {
    if (std::abs(angle_distance(p.t, 0.0)) < tol) {
      has_plus = true;
      *beta_plus = p.beta;
      continue;
    }
    if (std::abs(angle_distance(p.t, kPi)) < tol) {
      has_minus = true;
      *beta_minus = p.beta;
      continue;
    }
    bool paired = false;
    for (const Prevertex& q : pvs.points) {
      if (std::abs(angle_distance(q.t, kTwoPi - p.t)) < tol &&
          std::abs(q.beta - p.beta) < 1e-9) {
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return has_plus && has_minus && std::abs(*beta_plus) <= 0.5 + 1e-12 &&
         std::abs(*beta_minus) <= 0.5 + 1e-12;
}

// Grid verification of the symmetry hypothesis Im f / Im z > 0 on the upper
// half of the disk (approximate by construction).
bool verify_upper_half_positivity(const PrevertexSet& pvs) {
  for (double rho : {0.15, 0.35, 0.55, 0.75, 0.9}) {
    for (int k = 1; k < 12; ++k) {
      const double t = kPi * k / 12.0;
      const Complex z = std::polar(rho, t);
      const Complex f = map_value(pvs, Complex{1.0, 0.0}, z);
      if (f.imag() <= 0.0) return false;
    }
  }
  return true;
}

}  // namespace

AnalysisReport analyze_spec(const MapSpec& spec, const AnalyzeOptions& options) {
  AnalysisReport report;
  report.kind = spec.kind;
  report.d1 = spec.d1();
  report.d2 = spec.d2();

  PrevertexSet pvs;
  try {
    pvs = solve_prevertices(spec, options.tol);
  } catch (const InadmissibleError& e) {
    report.admissible = false;
    report.reason = e.what();
    return report;
  } catch (const DegreeCollapseError& e) {
    report.admissible = false;
    report.reason = e.what();
    return report;
  } catch (const DegenerateAngleError& e) {
    // An unbounded exterior angle also means the pair is not polygon data.
    report.admissible = false;
    report.reason = e.what();
    return report;
  }
  report.admissible = true;

  for (const Prevertex& p : pvs.points) {
    ReportVertex v;
    v.t = p.t;
    v.z = p.z;
    v.beta = p.beta;
    v.label = p.label == VertexLabel::Convex ? "convex" : "concave";
    report.prevertices.push_back(v);
  }

  report.counts = vertex_counts(pvs);
  report.winding = winding_degree(spec, options.winding_samples);

  const std::vector<double> betas = pvs.betas();
  for (double b : betas) report.univalence.sum_abs_beta += std::abs(b);
  report.univalence.theorem4_pass = univalence_bound(betas) == BoundCheck::Pass;

  double beta_plus = 0.0;
  double beta_minus = 0.0;
  if (spec.kind == MapKind::Interior && detect_symmetry(pvs, &beta_plus, &beta_minus) &&
      verify_upper_half_positivity(pvs)) {
    report.univalence.theorem5_applicable = true;
    report.univalence.theorem5_pass =
        univalence_bound_symmetric(betas, beta_plus, beta_minus) == BoundCheck::Pass;
  }

  const int n = spec.d1() + spec.d2();
  report.bounds.r_used = max_zero_modulus(spec);
  if (n >= 1) {
    report.bounds.min_sep = min_separation(spec.kind, n, report.bounds.r_used);
    report.bounds.max_sep = max_separation(spec.kind, n, report.bounds.r_used);
  } else {
    report.bounds.min_sep = report.bounds.max_sep =
        kTwoPi / circle_multiplicity(spec.kind);
  }
  if (spec.d2() >= 1) {
    report.bounds.radius_bound =
        zero_radius_lower_bound(spec.kind, spec.d1(), spec.d2()).r_min;
  }
  if (spec.kind == MapKind::Interior) {
    report.convexity_radius_pass =
        convexity_radius_check(spec, options.convexity_samples) == BoundVerdict::Pass;
  }
  return report;
}

nlohmann::json emit_report(const AnalysisReport& report) {
  nlohmann::json doc;
  doc["admissible"] = report.admissible;
  doc["kind"] = report.kind == MapKind::Interior ? "interior" : "exterior";
  doc["degrees"] = {{"d1", report.d1}, {"d2", report.d2}};
  if (!report.admissible) {
    doc["reason"] = report.reason;
    return doc;
  }
  nlohmann::json verts = nlohmann::json::array();
  for (const ReportVertex& v : report.prevertices) {
    verts.push_back({{"t", v.t},
                     {"z", {v.z.real(), v.z.imag()}},
                     {"beta", v.beta},
                     {"label", v.label}});
  }
  doc["prevertices"] = verts;
  doc["counts"] = {{"convex", report.counts.convex},
                   {"concave", report.counts.concave},
                   {"a_runs", report.counts.a_runs},
                   {"b_switches", report.counts.b_switches},
                   {"c_runs", report.counts.c_runs}};
  doc["winding"] = report.winding;
  doc["univalence"] = {
      {"sum_abs_beta", report.univalence.sum_abs_beta},
      {"theorem4_pass", report.univalence.theorem4_pass},
      {"theorem5_applicable", report.univalence.theorem5_applicable},
      {"theorem5_pass", report.univalence.theorem5_pass.has_value()
                            ? nlohmann::json(*report.univalence.theorem5_pass)
                            : nlohmann::json(nullptr)}};
  doc["bounds"] = {{"min_sep", report.bounds.min_sep},
                   {"max_sep", report.bounds.max_sep},
                   {"r_used", report.bounds.r_used},
                   {"radius_bound", report.bounds.radius_bound.has_value()
                                        ? nlohmann::json(*report.bounds.radius_bound)
                                        : nlohmann::json(nullptr)}};
  doc["convexity_radius_pass"] = report.convexity_radius_pass.has_value()
                                     ? nlohmann::json(*report.convexity_radius_pass)
                                     : nlohmann::json(nullptr);
  return doc;
}

AnalysisReport parse_report(const nlohmann::json& doc) {
  AnalysisReport report;
  if (!doc.is_object() || !doc.contains("admissible") || !doc.contains("degrees") ||
      !doc.contains("kind")) {
    throw ParseError("report: missing required fields");
  }
  report.admissible = doc["admissible"].get<bool>();
  report.kind =
      doc["kind"].get<std::string>() == "interior" ? MapKind::Interior : MapKind::Exterior;
  report.d1 = doc["degrees"]["d1"].get<int>();
  report.d2 = doc["degrees"]["d2"].get<int>();
  if (!report.admissible) {
    require_keys(doc, {"admissible", "kind", "degrees", "reason"}, "report");
    report.reason = doc["reason"].get<std::string>();
    return report;
  }
  require_keys(doc,
               {"admissible", "kind", "degrees", "prevertices", "counts", "winding",
                "univalence", "bounds", "convexity_radius_pass"},
               "report");
  for (const auto& v : doc["prevertices"]) {
    ReportVertex vertex;
    vertex.t = v["t"].get<double>();
    vertex.z = Complex{v["z"][0].get<double>(), v["z"][1].get<double>()};
    vertex.beta = v["beta"].get<double>();
    vertex.label = v["label"].get<std::string>();
    report.prevertices.push_back(vertex);
  }
  const auto& counts = doc["counts"];
  report.counts.convex = counts["convex"].get<int>();
  report.counts.concave = counts["concave"].get<int>();
  report.counts.a_runs = counts["a_runs"].get<int>();
  report.counts.b_switches = counts["b_switches"].get<int>();
  report.counts.c_runs = counts["c_runs"].get<int>();
  report.winding = doc["winding"].get<int>();
  const auto& uni = doc["univalence"];
  report.univalence.sum_abs_beta = uni["sum_abs_beta"].get<double>();
  report.univalence.theorem4_pass = uni["theorem4_pass"].get<bool>();
  report.univalence.theorem5_applicable = uni["theorem5_applicable"].get<bool>();
  if (!uni["theorem5_pass"].is_null()) {
    report.univalence.theorem5_pass = uni["theorem5_pass"].get<bool>();
  }
  const auto& bounds = doc["bounds"];
  report.bounds.min_sep = bounds["min_sep"].get<double>();
  report.bounds.max_sep = bounds["max_sep"].get<double>();
  report.bounds.r_used = bounds["r_used"].get<double>();
  if (!bounds["radius_bound"].is_null()) {
    report.bounds.radius_bound = bounds["radius_bound"].get<double>();
  }
  if (!doc["convexity_radius_pass"].is_null()) {
    report.convexity_radius_pass = doc["convexity_radius_pass"].get<bool>();
  }
  return report;
}

}  // namespace scmap
