#pragma once

#include <string>
#include <vector>

#include "annulus/json_io.hpp"

namespace annulus {

struct SvgStyle {
  int width = 800;
  int height = 800;
  double margin_frac = 0.08;
  int samples = 512;
  std::string curve_color = "#1f6fb4";
  std::string exterior_color = "#2ca02c";
  std::string seam_color = "#d62728";
  std::string fill_color = "#9ecae1";
  double stroke_width = 1.5;
};

// Deterministic SVG rendering of curve and rigged-annulus JSON objects:
// curves as polylines, annulus interiors shaded between the two boundary
// curves, welding seams highlighted when the curves coincide. Identical
// input and style produce byte-identical output.
std::string render_svg(const std::vector<Json>& objects,
                       const SvgStyle& style = {});

}  // namespace annulus
