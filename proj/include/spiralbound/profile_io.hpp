#pragma once

// File formats: profile (input data), curve samples, region report and
// two-column plot data.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spiralbound/bounding_regions.hpp"
#include "spiralbound/compliance.hpp"
#include "spiralbound/discrete_analysis.hpp"

namespace spiralbound {

inline constexpr std::string_view kProfileVersion = "spiralbound-profile/1";
inline constexpr std::string_view kReportVersion = "spiralbound-report/1";

struct Profile {
  SplineInput input;
  std::vector<CurvatureOverride> overrides;
};

/// Parses a profile document. With `degrees`, tangent angles given as
/// numbers are read in degrees. Throws InputError with a readable message.
Profile parse_profile(std::string_view text, bool degrees = false);
Profile read_profile(const std::filesystem::path& path, bool degrees = false);
/// Tangents are written as radians.
std::string format_profile(const Profile& profile);

/// Whitespace or comma separated coordinate pairs, one per line; '#' starts
/// a comment. Throws InputError on malformed lines.
std::vector<Point> parse_samples(std::string_view text);
std::vector<Point> read_samples(const std::filesystem::path& path);
void write_samples(std::ostream& out, std::span<const Point> samples);

void write_plot(std::ostream& out, std::span<const CurvaturePlotPoint> plot);

struct NodeReport {
  int index = 0;
  double rho = 0.0;
  double d = 0.0;
  double q = 0.0;
  ExtendedReal curvature_lower = ExtendedReal::neg_inf();
  ExtendedReal curvature_upper = ExtendedReal::pos_inf();
};

struct ChordReport {
  int index = 0;
  double c = 0.0;
  double mu = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  Point origin = Point::Zero();
  double width_estimate = 0.0;
  // Present when a region was built.
  std::optional<double> width;
  std::optional<BoundaryCurve> lower;
  std::optional<BoundaryCurve> upper;
};

struct RegionReport {
  std::string grade;           ///< empty when no region was built
  std::string classification;  ///< spiral, piecewise-spiral or inadmissible
  std::string trend;           ///< increasing, decreasing or constant
  bool closed = false;
  std::vector<Vertex> vertices;
  std::vector<Lim180Violation> violations;
  std::optional<double> width;
  std::vector<NodeReport> nodes;
  std::vector<ChordReport> chords;
};

/// Collects the analysis and, when given, the region.
RegionReport make_report(const DiscreteAnalysis& analysis, const Region* region);

/// JSON text; doubles are written with round-trip precision.
std::string serialize(const RegionReport& report);
RegionReport parse_report(std::string_view text);

std::string serialize(const ComplianceReport& report);

}  // namespace spiralbound
