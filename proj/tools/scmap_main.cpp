#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scmap/svg.hpp"
#include "scmap/trace.hpp"
#include "scmap/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitVerifyFailed = 3;

scmap::MapKind parse_kind(const std::string& kind) {
  if (kind == "interior") return scmap::MapKind::Interior;
  if (kind == "exterior") return scmap::MapKind::Exterior;
  throw scmap::ParseError("kind must be \"interior\" or \"exterior\"");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw scmap::Error("cannot open output file: " + path);
  out << text;
}

int cmd_analyze(const std::string& spec_path, const std::string& out_path,
                const std::string& svg_path, double tol, int nodes) {
  const scmap::MapSpec spec = scmap::load_spec_file(spec_path);
  scmap::AnalyzeOptions options;
  options.tol = tol;
  options.nodes = nodes;
  const scmap::AnalysisReport report = scmap::analyze_spec(spec, options);
  const std::string serialized = scmap::emit_report(report).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << serialized;
  } else {
    write_text(out_path, serialized);
  }
  if (!report.admissible) return kExitInadmissible;
  if (!svg_path.empty()) {
    const scmap::PrevertexSet pvs = scmap::solve_prevertices(spec, tol);
    const scmap::PolygonTrace trace =
        scmap::trace_polygon(pvs, scmap::Complex{1.0, 0.0}, nodes);
    scmap::write_figure_svg(svg_path, spec, pvs, trace);
  }
  return kExitOk;
}

int cmd_bounds(const std::string& kind_name, int n, double r) {
  const scmap::MapKind kind = parse_kind(kind_name);
  nlohmann::json record;
  record["min_sep"] = scmap::min_separation(kind, n, r);
  record["max_sep"] = scmap::max_separation(kind, n, r);
  if (r <= 0.05) {
    const auto window = scmap::concentration_window(kind, n, r);
    record["corollary7_window"] = {window.first, window.second};
  } else {
    record["corollary7_window"] = nullptr;
  }
  std::cout << record.dump(2) << "\n";
  return kExitOk;
}

int cmd_radius(const std::string& kind_name, int d1, int d2) {
  const scmap::RadiusBound bound =
      scmap::zero_radius_lower_bound(parse_kind(kind_name), d1, d2);
  nlohmann::json record;
  record["kind"] = kind_name;
  record["d1"] = bound.d1;
  record["d2"] = bound.d2;
  record["r_min"] = bound.r_min;
  std::cout << record.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, int trials) {
  scmap::VerifyOptions options;
  options.seed = seed;
  options.trials = trials;
  const scmap::VerifyReport report = scmap::run_verification(options);
  std::printf("seed=%llu trials=%d\n", static_cast<unsigned long long>(seed), trials);
  for (const scmap::SuiteResult& suite : report.suites) {
    std::printf("%-18s pass=%-4d fail=%d\n", suite.name.c_str(), suite.pass,
                suite.fail);
  }
  std::printf("concave-degree specs: %d\n", report.specs_with_concave);
  if (report.starvation_warnings > 0) {
    std::printf("sampler starvation warnings: %d\n", report.starvation_warnings);
  }
  if (!report.ok) {
    std::fprintf(stderr, "first failing spec (replay with `scmap analyze`):\n%s\n",
                 report.failing_spec_json.c_str());
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_trace(const std::string& spec_path, const std::string& svg_path,
              double scale_re, double scale_im) {
  const scmap::MapSpec spec = scmap::load_spec_file(spec_path);
  scmap::PrevertexSet pvs;
  try {
    pvs = scmap::solve_prevertices(spec);
  } catch (const scmap::InadmissibleError& e) {
    std::cerr << "inadmissible spec: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const scmap::DegreeCollapseError& e) {
    std::cerr << "inadmissible spec: " << e.what() << "\n";
    return kExitInadmissible;
  }
  const scmap::PolygonTrace trace =
      scmap::trace_polygon(pvs, scmap::Complex{scale_re, scale_im});
  scmap::write_figure_svg(svg_path, spec, pvs, trace);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwarz-Christoffel polygon mappings from Blaschke products"};
  app.require_subcommand(1);

  std::string spec_path, out_path, svg_path, kind_name{"interior"};
  double tol = 1e-8, r = 0.0, scale_re = 1.0, scale_im = 0.0;
  int nodes = 32, n = 1, d1 = 0, d2 = 1, trials = 200;
  std::uint64_t seed = 42;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a spec file");
  analyze->add_option("spec", spec_path, "spec JSON file")->required();
  analyze->add_option("--out", out_path, "report JSON path (default stdout)");
  analyze->add_option("--svg", svg_path, "figure SVG path");
  analyze->add_option("--tol", tol, "admissibility tolerance");
  analyze->add_option("--nodes", nodes, "quadrature nodes per arc");

  CLI::App* bounds = app.add_subcommand("bounds", "separation bounds");
  bounds->add_option("--kind", kind_name, "interior|exterior")->required();
  bounds->add_option("--n", n, "Blaschke degree")->required();
  bounds->add_option("--r", r, "zero-radius bound")->required();

  CLI::App* radius = app.add_subcommand("radius", "zero-location lower bound");
  radius->add_option("--kind", kind_name, "interior|exterior")->required();
  radius->add_option("--d1", d1, "degree of B1")->required();
  radius->add_option("--d2", d2, "degree of B2")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--trials", trials, "number of sampled specs");

  CLI::App* trace = app.add_subcommand("trace", "trace the image polygon to SVG");
  trace->add_option("spec", spec_path, "spec JSON file")->required();
  trace->add_option("--svg", svg_path, "figure SVG path")->required();
  trace->add_option("--scale-re", scale_re, "real part of the scale constant");
  trace->add_option("--scale-im", scale_im, "imaginary part of the scale constant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(spec_path, out_path, svg_path, tol, nodes);
    }
    if (app.got_subcommand(bounds)) return cmd_bounds(kind_name, n, r);
    if (app.got_subcommand(radius)) return cmd_radius(kind_name, d1, d2);
    if (app.got_subcommand(verify)) return cmd_verify(seed, trials);
    if (app.got_subcommand(trace)) {
      return cmd_trace(spec_path, svg_path, scale_re, scale_im);
    }
  } catch (const scmap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scmap::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scmap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
