#include "spiralbound/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spiralbound/errors.hpp"

namespace spiralbound {

namespace {

constexpr double kProjectionSlack = 1e-12;

bool projects(const RegionChord& chord, const Point& local) {
  return std::abs(local.x()) <= chord.frame.half_length() * (1.0 + kProjectionSlack);
}

}  // namespace

std::vector<SampleAssignment> assign_samples(const Region& region, std::span<const Point> polyline) {
  if (polyline.empty()) throw InputError("empty polyline");
  std::vector<SampleAssignment> out(polyline.size());
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < region.chords.size(); ++j) {
      const Point local = region.chords[j].frame.to_local(polyline[i]);
      if (projects(region.chords[j], local) && std::abs(local.y()) < best) {
        best = std::abs(local.y());
        out[i] = {static_cast<int>(j), local};
      }
    }
  }
  return out;
}

double default_tolerance(const Region& region) {
  double cmax = 0.0;
  for (const auto& ch : region.chords) cmax = std::max(cmax, ch.frame.half_length());
  return 1e-9 * cmax;
}

ComplianceReport check_containment(const Region& region, std::span<const Point> polyline,
                                   std::optional<double> tol) {
  if (polyline.empty()) throw InputError("empty polyline");
  ComplianceReport report;
  report.tolerance = tol.value_or(default_tolerance(region));
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < polyline.size(); ++i) {
    std::optional<SampleMargin> best;
    for (std::size_t j = 0; j < region.chords.size(); ++j) {
      const RegionChord& ch = region.chords[j];
      const Point local = ch.frame.to_local(polyline[i]);
      if (!projects(ch, local)) continue;
      const double c = ch.frame.half_length();
      const double x = std::clamp(local.x(), -c, c);
      SampleMargin m{static_cast<int>(i), static_cast<int>(j), x, local.y(), local.y() - eval(ch.lower, x),
                     eval(ch.upper, x) - local.y()};
      if (!best || m.margin() > best->margin() ||
          (m.margin() == best->margin() && std::abs(m.y) < std::abs(best->y))) {
        best = m;
      }
    }
    if (!best) {
      ++report.unassigned;
      continue;
    }
    report.worst_margin = std::min(report.worst_margin, best->margin());
    if (best->margin() < -report.tolerance) report.violations.push_back(static_cast<int>(i));
    report.samples.push_back(*best);
  }
  if (report.samples.empty()) report.worst_margin = 0.0;
  report.pass = report.violations.empty();
  return report;
}

}  // namespace spiralbound
