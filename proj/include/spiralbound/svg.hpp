#pragma once

#include <string>

#include "spiralbound/bounding_regions.hpp"
#include "spiralbound/discrete_analysis.hpp"

namespace spiralbound {

struct SvgOptions {
  int samples_per_chord = 64;  ///< points per boundary path, at least 2
  double canvas_width = 800.0;
  double margin = 24.0;
  bool width_labels = true;
};

/// SVG 1.1 drawing in model coordinates. All geometry sits in one group whose
/// transform="matrix(...)" maps model to canvas coordinates; every chord gets
/// one path for its lower and one for its upper boundary.
std::string render_svg(const DiscreteAnalysis& analysis, const Region* region, const SvgOptions& options = {});

}  // namespace spiralbound
