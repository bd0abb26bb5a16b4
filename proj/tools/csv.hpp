#pragma once

#include <string>
#include <vector>

#include "alleedyn/integrate.hpp"

namespace alleedyn::cli {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Serializes a trajectory with header `t,x,y1,y2`.
std::string trajectory_csv(const Trajectory& t);

/// Parses `trajectory_csv` output back; throws Error on malformed input.
Trajectory parse_trajectory_csv(const std::string& text);

}  // namespace alleedyn::cli
