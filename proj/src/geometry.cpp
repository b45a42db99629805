#include "scmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scmap {

bool segments_cross(std::complex<double> a0, std::complex<double> a1,
                    std::complex<double> b0, std::complex<double> b1) {
  const std::complex<double> da = a1 - a0;
  const std::complex<double> db = b1 - b0;
  const double den = da.real() * db.imag() - da.imag() * db.real();
  if (den == 0.0) return false;  // parallel or degenerate
  const std::complex<double> d0 = b0 - a0;
  const double s = (d0.real() * db.imag() - d0.imag() * db.real()) / den;
  const double u = (d0.real() * da.imag() - d0.imag() * da.real()) / den;
  const double eps = 1e-12;
  return s > eps && s < 1.0 - eps && u > eps && u < 1.0 - eps;
}

bool closed_polyline_self_intersects(const std::vector<std::complex<double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) return false;

  struct Segment {
    std::complex<double> p, q;
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Segment> segs(n);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> p = points[i];
    const std::complex<double> q = points[(i + 1) % n];
    segs[i] = Segment{p, q, std::min(p.real(), q.real()), std::max(p.real(), q.real()),
                      std::min(p.imag(), q.imag()), std::max(p.imag(), q.imag())};
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&segs](int a, int b) { return segs[a].xmin < segs[b].xmin; });

  for (int ii = 0; ii < n; ++ii) {
    const int i = order[ii];
    for (int jj = ii + 1; jj < n; ++jj) {
      const int j = order[jj];
      if (segs[j].xmin > segs[i].xmax) break;
      const int gap = std::abs(i - j);
      if (gap <= 1 || gap == n - 1) continue;  // adjacent along the polyline
      if (segs[j].ymin > segs[i].ymax || segs[j].ymax < segs[i].ymin) continue;
      if (segments_cross(segs[i].p, segs[i].q, segs[j].p, segs[j].q)) return true;
    }
  }
  return false;
}

}  // namespace scmap
