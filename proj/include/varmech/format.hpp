#pragma once

#include <ostream>
#include <string>

#include "varmech/core.hpp"

namespace varmech {

/// Locale-independent decimal rendering, 17 significant digits (enough to
/// reproduce the double exactly on re-parse).
std::string fmt17(double x);

/// Locale-independent shortest round-trip rendering (1 -> "1", 0.5 -> "0.5").
std::string fmt_short(double x);

/// Parses a double; returns false on trailing junk or empty input.
bool parse_double(const std::string& text, double& out);

/// Splits "a,b,..." into exactly n doubles. Throws SizeError on anything else.
Vec parse_csv_numbers(const std::string& text, std::size_t n);

/// Streams the trajectory as CSV with header t,q1,q2,v1,v2,E,p, one row per
/// sample, LF line endings, 17 significant digits. 2-dof trajectories only.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace varmech
