#pragma once

#include <string>

#include "alleedyn/integrate.hpp"

namespace alleedyn::cli {

/// Self-contained SVG line chart of the three densities against time:
/// axes, tick labels, legend, one polyline per component.
std::string trajectory_svg(const Trajectory& t);

}  // namespace alleedyn::cli
