#ifndef RIESZ_CLI_SVG_HPP
#define RIESZ_CLI_SVG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "riesz/fronts.hpp"

namespace riesz::cli {

/// Scatter of all points (small filled blue dots) with the selected points
/// ringed in red and joined, in index order, by a dashed red polyline. 1D sets
/// are drawn on a horizontal line. Output depends only on the inputs.
std::string render_selection_svg(const PointData& points, const std::vector<std::size_t>& selected);

}  // namespace riesz::cli

#endif  // RIESZ_CLI_SVG_HPP
