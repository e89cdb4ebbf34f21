#pragma once

#include <span>
#include <string>

#include "varmech/geodesic.hpp"

namespace varmech {

/// Renders a family of geodesics as standalone SVG 1.1: one polyline per
/// geodesic sampled from its closed form on [t_min, t_max], plus the q2 = 0
/// axis. The viewport is fitted to the data with a 10% margin on each side.
/// Output depends only on the arguments, so equal inputs give equal bytes.
std::string render_geodesics_svg(std::span<const GeodesicParams> family,
                                 double t_min, double t_max,
                                 std::size_t samples_per_curve = 256);

}  // namespace varmech
