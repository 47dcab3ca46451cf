#include "spiralbound/rounding_experiment.hpp"

#include <algorithm>
#include <cmath>

namespace spiralbound {

namespace {

constexpr double kRadius = 10.0;
constexpr int kPoints = 21;
constexpr double kStepDegrees = 3.0;

double max_deviation(const std::vector<CurvaturePlotPoint>& plot, double reference) {
  double m = 0.0;
  for (const auto& p : plot) m = std::max(m, std::abs(p.q - reference));
  return m;
}

}  // namespace

SplineInput circle_dataset() {
  SplineInput in;
  for (int i = 0; i < kPoints; ++i) {
    const double t = i * kStepDegrees * kPi / 180.0;
    in.points.emplace_back(kRadius * std::sin(t), kRadius * (1.0 - std::cos(t)));
  }
  in.tau_start = 0.0;
  in.tau_end = (kPoints - 1) * kStepDegrees * kPi / 180.0;
  return in;
}

SplineInput rounded(const SplineInput& input, int decimals) {
  const double scale = std::pow(10.0, decimals);
  SplineInput out = input;
  for (auto& p : out.points) {
    p.x() = std::round(p.x() * scale) / scale;
    p.y() = std::round(p.y() * scale) / scale;
  }
  return out;
}

RoundingExperiment run_rounding_experiment() {
  RoundingExperiment ex;
  ex.exact = circle_dataset();
  ex.rounded = rounded(ex.exact, 2);
  ex.reference_curvature = 1.0 / kRadius;
  ex.exact_plot = discrete_curvature_plot(ex.exact.points);
  ex.rounded_plot = discrete_curvature_plot(ex.rounded.points);
  ex.exact_max_deviation = max_deviation(ex.exact_plot, ex.reference_curvature);
  ex.rounded_max_deviation = max_deviation(ex.rounded_plot, ex.reference_curvature);
  for (std::size_t i = 2; i < ex.rounded_plot.size(); ++i) {
    const double d0 = ex.rounded_plot[i - 1].q - ex.rounded_plot[i - 2].q;
    const double d1 = ex.rounded_plot[i].q - ex.rounded_plot[i - 1].q;
    if (d0 * d1 < 0.0) ++ex.rounded_sign_changes;
  }
  return ex;
}

}  // namespace spiralbound
