#pragma once

#include <span>
#include <vector>

#include "spiralbound/discrete_analysis.hpp"

namespace spiralbound {

/// C2 parametric cubic spline through the nodes, parametrized by accumulated
/// chord length, with clamped first derivatives at both ends.
class ChordLengthCubicSpline {
 public:
  ChordLengthCubicSpline(std::span<const Point> nodes, const Point& start_derivative, const Point& end_derivative);

  /// Position at parameter t in [0, length()]; clamped outside.
  Point operator()(double t) const;
  Point derivative(double t) const;

  const std::vector<double>& knots() const { return knots_; }
  double length() const { return knots_.back(); }

 private:
  std::size_t segment(double t) const;

  std::vector<double> knots_;
  std::vector<Point> nodes_;
  std::vector<Point> second_;  // second derivatives at the knots
};

inline constexpr int kDefaultSamplesPerChord = 64;

/// Samples the chord-length spline of open data with unit end tangents:
/// samples_per_chord points per chord starting at its first node, plus the
/// final node (M * K + 1 points).
std::vector<Point> cubic_spline_fixture(const SplineInput& input, int samples_per_chord = kDefaultSamplesPerChord);

}  // namespace spiralbound
