#include "scmap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace scmap {

namespace {

constexpr double kPanel = 360.0;
constexpr double kMargin = 20.0;

struct Frame {
  double origin_x;     // svg x of world 0 (after scaling)
  double origin_y;
  double scale;
  double world_cx, world_cy;

  double x(double wx) const { return origin_x + (wx - world_cx) * scale; }
  double y(double wy) const { return origin_y - (wy - world_cy) * scale; }
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << v;
  return out.str();
}

void circle(std::ostringstream& out, const Frame& f, Complex c, double radius,
            const std::string& style) {
  out << "  <circle cx=\"" << fmt(f.x(c.real())) << "\" cy=\"" << fmt(f.y(c.imag()))
      << "\" r=\"" << fmt(radius) << "\" " << style << "/>\n";
}

void cross(std::ostringstream& out, const Frame& f, Complex c, double half,
           const std::string& stroke) {
  const double x = f.x(c.real());
  const double y = f.y(c.imag());
  out << "  <path d=\"M" << fmt(x - half) << " " << fmt(y - half) << " L" << fmt(x + half)
      << " " << fmt(y + half) << " M" << fmt(x - half) << " " << fmt(y + half) << " L"
      << fmt(x + half) << " " << fmt(y - half) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"1.5\" fill=\"none\"/>\n";
}

void polyline(std::ostringstream& out, const Frame& f,
              const std::vector<Complex>& pts, const std::string& stroke) {
  if (pts.size() < 2) return;
  out << "  <polyline points=\"";
  for (const Complex& p : pts) {
    out << fmt(f.x(p.real())) << "," << fmt(f.y(p.imag())) << " ";
  }
  out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\"/>\n";
}

// Clips the ray p + s*dir (s >= 0) against the world-box [x0,x1]x[y0,y1].
bool clip_ray(Complex p, Complex dir, double x0, double x1, double y0, double y1,
              Complex* end) {
  double smax = 1e18;
  const auto limit = [&](double origin, double d, double lo, double hi) {
    if (d > 1e-15) {
      smax = std::min(smax, (hi - origin) / d);
    } else if (d < -1e-15) {
      smax = std::min(smax, (lo - origin) / d);
    }
  };
  limit(p.real(), dir.real(), x0, x1);
  limit(p.imag(), dir.imag(), y0, y1);
  if (smax <= 0.0 || smax >= 1e18) return false;
  *end = p + smax * dir;
  return true;
}

}  // namespace

std::string render_figure_svg(const MapSpec& spec, const PrevertexSet& pvs,
                              const PolygonTrace& trace) {
  std::ostringstream out;
  const double width = 2.0 * kPanel + 3.0 * kMargin;
  const double height = kPanel + 2.0 * kMargin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Left panel: unit disk.
  Frame disk;
  disk.scale = kPanel / 2.4;
  disk.world_cx = 0.0;
  disk.world_cy = 0.0;
  disk.origin_x = kMargin + kPanel / 2.0;
  disk.origin_y = kMargin + kPanel / 2.0;
  circle(out, disk, Complex{0.0, 0.0}, disk.scale,
         "fill=\"none\" stroke=\"#888\" stroke-width=\"1\"");
  for (const DiskZero& z : spec.b1.zeros()) {
    circle(out, disk, z.value(), 3.5, "fill=\"#1f77b4\"");
  }
  for (const DiskZero& z : spec.b2.zeros()) {
    cross(out, disk, z.value(), 4.0, "#d62728");
  }
  for (const Prevertex& p : pvs.points) {
    const std::string color = p.label == VertexLabel::Convex ? "#1f77b4" : "#d62728";
    circle(out, disk, p.z, 4.5,
           "fill=\"" + color + "\" stroke=\"black\" stroke-width=\"0.8\"");
  }

  // Right panel: traced polygon, rays clipped to a box around the finite part.
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  bool seeded = false;
  const auto grow = [&](Complex p) {
    if (!seeded) {
      x0 = x1 = p.real();
      y0 = y1 = p.imag();
      seeded = true;
      return;
    }
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  };
  for (const TraceVertex& v : trace.vertices) {
    if (v.finite) grow(v.position);
  }
  // A lone finite vertex (or none) gives a degenerate box; pad by at least a
  // unit so rays toward infinite vertices remain visible.
  const double span = std::max({x1 - x0, y1 - y0, 1.0});
  x0 -= 0.35 * span;
  x1 += 0.35 * span;
  y0 -= 0.35 * span;
  y1 += 0.35 * span;

  Frame img;
  img.scale = kPanel / std::max(x1 - x0, y1 - y0);
  img.world_cx = 0.5 * (x0 + x1);
  img.world_cy = 0.5 * (y0 + y1);
  img.origin_x = 2.0 * kMargin + kPanel + kPanel / 2.0;
  img.origin_y = kMargin + kPanel / 2.0;

  out << "  <rect x=\"" << fmt(img.x(x0)) << "\" y=\"" << fmt(img.y(y1)) << "\" width=\""
      << fmt((x1 - x0) * img.scale) << "\" height=\"" << fmt((y1 - y0) * img.scale)
      << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"0.8\"/>\n";

  const int n = static_cast<int>(trace.vertices.size());
  for (int k = 0; k < n; ++k) {
    const std::vector<Complex>& line = trace.edge_samples[k];
    std::vector<Complex> clipped;
    for (const Complex& p : line) {
      if (p.real() >= x0 && p.real() <= x1 && p.imag() >= y0 && p.imag() <= y1) {
        clipped.push_back(p);
      }
    }
    polyline(out, img, clipped, "#333");

    // Extend edges that run off to an infinite vertex as rays.
    const TraceVertex& from = trace.vertices[k];
    const TraceVertex& to = trace.vertices[(k + 1) % n];
    if (from.finite && !to.finite && trace.anchored) {
      Complex end;
      if (clip_ray(from.position, from.direction_out, x0, x1, y0, y1, &end)) {
        polyline(out, img, {from.position, end}, "#999");
      }
    }
    if (!from.finite && to.finite && trace.anchored) {
      Complex end;
      if (clip_ray(to.position, -to.direction_in, x0, x1, y0, y1, &end)) {
        polyline(out, img, {to.position, end}, "#999");
      }
    }
  }
  for (const TraceVertex& v : trace.vertices) {
    if (!v.finite) continue;
    const std::string color = v.beta > 0.0 ? "#1f77b4" : "#d62728";
    circle(out, img, v.position, 4.0,
           "fill=\"" + color + "\" stroke=\"black\" stroke-width=\"0.8\"");
  }

  out << "</svg>\n";
  return out.str();
}

void write_figure_svg(const std::string& path, const MapSpec& spec,
                      const PrevertexSet& pvs, const PolygonTrace& trace) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open SVG output file: " + path);
  out << render_figure_svg(spec, pvs, trace);
}

}  // namespace scmap
