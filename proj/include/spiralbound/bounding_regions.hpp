#pragma once

// Bounding regions enclosing every spiral (or piecewise-spiral) curve that
// interpolates the data, and their widths.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spiralbound/core_geometry.hpp"
#include "spiralbound/discrete_analysis.hpp"

namespace spiralbound {

enum class Grade { simple, vertex, narrowed };

std::string_view to_string(Grade grade);
/// Throws InputError for unknown names.
Grade parse_grade(std::string_view name);

struct RegionChord {
  ChordFrame frame;
  BoundaryCurve lower;
  BoundaryCurve upper;
  double width = 0.0;           ///< max over the chord of upper - lower
  double width_estimate = 0.0;  ///< c^2 |q_j - q_{j+1}| / 2
};

/// Bounds on the unknown curvature k_i at every node.
struct CurvatureRanges {
  std::vector<ExtendedReal> lower;
  std::vector<ExtendedReal> upper;
};

/// Tangent-angle ranges alpha' <= alpha_j <= alpha'', beta' <= beta_j <= beta''
/// per chord, for increasing curvature.
struct AngleRanges {
  struct Chord {
    double alpha_lo = 0.0, alpha_hi = 0.0;
    double beta_lo = 0.0, beta_hi = 0.0;
  };
  std::vector<Chord> chords;
};

struct Region {
  Grade grade = Grade::simple;
  std::vector<RegionChord> chords;
  double width = 0.0;
  std::optional<CurvatureRanges> curvature;  ///< narrowed grade only
};

/// User bound on the curvature at a node; tightens, never loosens.
struct CurvatureOverride {
  int node = 0;
  std::optional<double> lower;
  std::optional<double> upper;
};

/// Union of lenses between A(x; c_j, -eta_j) and A(x; c_j, xi_j).
/// Throws InadmissibleData unless the data classifies as a spiral.
Region simple_region(const DiscreteAnalysis& analysis);

/// Piecewise-spiral bound: on chords next to a vertex one lens arc is
/// replaced by the arc transporting the neighbouring tangent estimate across
/// the vertex. Spiral data yields the simple region.
Region vertex_region(const DiscreteAnalysis& analysis);

/// Angle table of the narrowed region; assumes increasing (or constant)
/// curvature.
AngleRanges narrowed_angle_ranges(const DiscreteAnalysis& analysis);

/// Node curvature bounds from the angle table, with optional overrides.
/// Throws InfeasibleCurvature if an override contradicts the computed bounds
/// or a node ends up with lower > upper. Assumes increasing curvature.
CurvatureRanges curvature_ranges(const DiscreteAnalysis& analysis, const AngleRanges& ranges,
                                 std::span<const CurvatureOverride> overrides = {});

/// Biarc-bounded region for spiral data. Decreasing data is handled by
/// reflecting it and mapping the result back.
Region narrowed_region(const DiscreteAnalysis& analysis, std::span<const CurvatureOverride> overrides = {});

/// Dispatches on grade.
Region build_region(const DiscreteAnalysis& analysis, Grade grade,
                    std::span<const CurvatureOverride> overrides = {});

/// Default grade for the data: narrowed for spirals, vertex otherwise.
Grade default_grade(const Classification& classification);

inline constexpr int kWidthSamples = 1000;

struct WidthReport {
  double width = 0.0;
  std::vector<double> per_chord;
  std::vector<double> estimate;
};

/// Chords bounded by two arcs use the closed form
/// c |tan(phi_upper/2) - tan(phi_lower/2)|; chords with a biarc boundary are
/// sampled at kWidthSamples abscissae.
WidthReport region_width(const Region& region);

}  // namespace spiralbound
