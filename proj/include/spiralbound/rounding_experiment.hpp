#pragma once

#include <vector>

#include "spiralbound/discrete_analysis.hpp"

namespace spiralbound {

/// 21 points on the circle x = 10 sin t, y = 10 (1 - cos t), t = 0, 3, ..., 60
/// degrees, with end tangents 0 and 60 degrees.
SplineInput circle_dataset();

/// Copy of the data with coordinates rounded to `decimals` decimal digits.
SplineInput rounded(const SplineInput& input, int decimals);

struct RoundingExperiment {
  SplineInput exact;
  SplineInput rounded;
  std::vector<CurvaturePlotPoint> exact_plot;    ///< interior nodes
  std::vector<CurvaturePlotPoint> rounded_plot;  ///< interior nodes
  double reference_curvature = 0.1;
  double exact_max_deviation = 0.0;    ///< max |q - 0.1| before rounding
  double rounded_max_deviation = 0.0;  ///< max |q - 0.1| after rounding
  int rounded_sign_changes = 0;        ///< sign changes of q_{i+1} - q_i after rounding
};

/// Discrete curvature of the circle data before and after rounding the
/// coordinates to two decimals.
RoundingExperiment run_rounding_experiment();

}  // namespace spiralbound
