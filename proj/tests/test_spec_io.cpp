#include <doctest.h>

#include <cmath>

#include "scmap/spec_io.hpp"
#include "test_util.hpp"

using namespace scmap;

namespace {

nlohmann::json koebe_doc() {
  return nlohmann::json{
      {"kind", "interior"},
      {"b1", {{"rotation_deg", 0.0}, {"zeros", nlohmann::json::array()}}},
      {"b2", {{"rotation_deg", 0.0}, {"zeros", {{-0.5, 0.0}}}}}};
}

}  // namespace

TEST_CASE("spec document parsing") {
  const MapSpec spec = parse_spec_document(koebe_doc());
  CHECK(spec.kind == MapKind::Interior);
  CHECK(spec.d1() == 0);
  CHECK(spec.d2() == 1);
  CHECK(std::abs(spec.b2.zeros()[0].value() - Complex{-0.5, 0.0}) < 1e-15);

  nlohmann::json with_unknown = koebe_doc();
  with_unknown["extra"] = 1;
  CHECK_THROWS_AS(parse_spec_document(with_unknown), ParseError);

  nlohmann::json bad_kind = koebe_doc();
  bad_kind["kind"] = "elsewhere";
  CHECK_THROWS_AS(parse_spec_document(bad_kind), ParseError);

  nlohmann::json outside = koebe_doc();
  outside["b2"]["zeros"] = {{1.5, 0.0}};
  CHECK_THROWS_AS(parse_spec_document(outside), ParseError);

  nlohmann::json shared = koebe_doc();
  shared["b1"]["zeros"] = {{-0.5, 0.0}};
  CHECK_THROWS_AS(parse_spec_document(shared), ParseError);

  nlohmann::json missing = koebe_doc();
  missing.erase("b2");
  CHECK_THROWS_AS(parse_spec_document(missing), ParseError);

  nlohmann::json extra_in_product = koebe_doc();
  extra_in_product["b1"]["color"] = "red";
  CHECK_THROWS_AS(parse_spec_document(extra_in_product), ParseError);
}

TEST_CASE("spec document round trip preserves degrees and zeros") {
  const MapSpec spec = testutil::symmetric_pair_spec(0.6);
  const MapSpec back = parse_spec_document(emit_spec_document(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.d1() == spec.d1());
  CHECK(back.d2() == spec.d2());
  CHECK(std::abs(back.b1.zeros()[0].value() - spec.b1.zeros()[0].value()) < 1e-15);
}

TEST_CASE("analysis report for the Koebe pair") {
  const AnalysisReport report = analyze_spec(testutil::koebe_spec());
  CHECK(report.admissible);
  CHECK(report.d1 == 0);
  CHECK(report.d2 == 1);
  REQUIRE(report.prevertices.size() == 2);
  CHECK(report.prevertices[0].beta == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(report.prevertices[1].beta == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(report.prevertices[0].label == "convex");
  CHECK(report.prevertices[1].label == "concave");
  CHECK(report.winding == 0);
  CHECK(report.counts.convex == 1);
  CHECK(report.counts.concave == 1);
  CHECK(report.univalence.sum_abs_beta == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(report.univalence.theorem4_pass);
  // beta = 3/2 at t = 0 exceeds 1/2, so the symmetric refinement is out of scope.
  CHECK_FALSE(report.univalence.theorem5_applicable);
  CHECK_FALSE(report.univalence.theorem5_pass.has_value());
  REQUIRE(report.bounds.radius_bound.has_value());
  CHECK(*report.bounds.radius_bound == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(report.bounds.r_used == doctest::Approx(0.5).epsilon(1e-15));
  REQUIRE(report.convexity_radius_pass.has_value());
  CHECK(*report.convexity_radius_pass);
}

TEST_CASE("analysis report: symmetric square spec activates the refined test") {
  const AnalysisReport report = analyze_spec(testutil::square_spec());
  CHECK(report.admissible);
  CHECK(report.univalence.theorem5_applicable);
  REQUIRE(report.univalence.theorem5_pass.has_value());
  CHECK(*report.univalence.theorem5_pass);
}

TEST_CASE("analysis report for an inadmissible spec") {
  const AnalysisReport report = analyze_spec(testutil::symmetric_pair_spec(0.2));
  CHECK_FALSE(report.admissible);
  CHECK(!report.reason.empty());
  const nlohmann::json doc = emit_report(report);
  CHECK(doc["admissible"] == false);
  const AnalysisReport back = parse_report(doc);
  CHECK(back.reason == report.reason);
}

TEST_CASE("report JSON round trip is lossless") {
  for (const MapSpec& spec :
       {testutil::koebe_spec(), testutil::square_spec(),
        testutil::symmetric_pair_spec(0.6), testutil::symmetric_pair_spec(0.2)}) {
    const AnalysisReport report = analyze_spec(spec);
    const nlohmann::json once = emit_report(report);
    const nlohmann::json twice = emit_report(parse_report(once));
    CHECK(once.dump() == twice.dump());
  }
}

TEST_CASE("report parser rejects unknown fields") {
  nlohmann::json doc = emit_report(analyze_spec(testutil::koebe_spec()));
  doc["surprise"] = 1;
  CHECK_THROWS_AS(parse_report(doc), ParseError);
}
