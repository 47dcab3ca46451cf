#pragma once

// Containment test of a candidate curve (dense polyline) against a region.

#include <optional>
#include <span>
#include <vector>

#include "spiralbound/bounding_regions.hpp"

namespace spiralbound {

struct SampleAssignment {
  int chord = -1;  ///< -1 when the sample projects onto no chord
  Point local = Point::Zero();
};

/// Maps every sample to the chord whose frame projects it into [-c, c] with
/// the smallest |local y|. Throws InputError on an empty polyline.
std::vector<SampleAssignment> assign_samples(const Region& region, std::span<const Point> polyline);

struct SampleMargin {
  int sample = 0;
  int chord = -1;
  double x = 0.0;
  double y = 0.0;
  double above_lower = 0.0;  ///< y - lower(x)
  double below_upper = 0.0;  ///< upper(x) - y

  double margin() const { return above_lower < below_upper ? above_lower : below_upper; }
};

struct ComplianceReport {
  std::vector<SampleMargin> samples;  ///< assigned samples only
  std::vector<int> violations;        ///< sample indices with margin < -tol
  int unassigned = 0;
  double tolerance = 0.0;
  double worst_margin = 0.0;
  bool pass = true;
};

/// Default tolerance: 1e-9 times the largest half-chord.
double default_tolerance(const Region& region);

/// Margins against every chord the sample projects onto; the most favourable
/// one is kept since the region is a union. Unassigned samples are counted
/// but never fail the verdict.
ComplianceReport check_containment(const Region& region, std::span<const Point> polyline,
                                   std::optional<double> tol = std::nullopt);

}  // namespace spiralbound
