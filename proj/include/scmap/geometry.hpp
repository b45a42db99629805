#pragma once

#include <complex>
#include <vector>

namespace scmap {

// Proper interior crossing of segments (a0,a1) and (b0,b1); shared endpoints
// and touching configurations do not count.
bool segments_cross(std::complex<double> a0, std::complex<double> a1,
                    std::complex<double> b0, std::complex<double> b1);

// True iff any two non-adjacent segments of the closed polyline cross.
// points[0] is implicitly joined to points.back(). Bounding-box sweep over
// segments ordered by their minimum x.
bool closed_polyline_self_intersects(const std::vector<std::complex<double>>& points);

}  // namespace scmap
