#pragma once

#include <string>

#include "kunstweg/geometry.hpp"

namespace kunstweg {

struct SvgOptions {
  /// Arrows for the half-circumference side vectors of every path.
  bool path_vectors = false;
  /// Draw the vectors that drop out of the y-sum dashed (needs path_vectors).
  bool cancellations = false;
  /// Rays from C to each P_j.
  bool rays = true;
  bool labels = true;
};

/// Static SVG 1.1 figure of the chain: polygon outlines, the points P_0..P_n,
/// the circle of radius R about C and optional rays, path arrows and dashed
/// cancelling vectors. The viewBox covers the circle and every outline with a
/// 5% margin; stroke widths scale with R.
std::string render_svg(const PolygonChain<double>& chain, const SvgOptions& options = {});

}  // namespace kunstweg
