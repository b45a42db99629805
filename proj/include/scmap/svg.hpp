#pragma once

#include <string>

#include "scmap/spec_io.hpp"
#include "scmap/trace.hpp"

namespace scmap {

// Two-panel figure: the unit disk with zeros and labelled pre-vertices on
// the left, the traced image polygon (rays clipped to a bounding box) on the
// right.
std::string render_figure_svg(const MapSpec& spec, const PrevertexSet& pvs,
                              const PolygonTrace& trace);

void write_figure_svg(const std::string& path, const MapSpec& spec,
                      const PrevertexSet& pvs, const PolygonTrace& trace);

}  // namespace scmap
